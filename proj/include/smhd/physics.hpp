#pragma once

#include <array>

namespace smhd {

using V3 = std::array<double, 3>;

/// Ideal gas and transport coefficients. kappa is derived from mu and the
/// Prandtl number when prandtl > 0.
struct Physics {
  double gamma = 5.0 / 3.0;
  double cv = 1.0;
  double mu = 0.0;
  double kappa = 0.0;
  double eta = 0.0;
};

struct Thermo {
  double e;  // specific internal energy
  double h;  // specific enthalpy
  double T;
  double c;  // sound speed
};

Thermo thermo(const Physics& ph, double rho, double p);

struct WaveSpeeds {
  double c;   // sound
  double ca;  // Alfven along the axis
  double cs;  // slow
  double cf;  // fast
};

/// Speeds along axis a for the state (rho, p, B).
WaveSpeeds wave_speeds(const Physics& ph, double rho, double p, const V3& B, int a);

enum class LambdaKind { v, p, b, mhd };

/// Maximal characteristic speed of the chosen operator along axis a.
double lambda(LambdaKind k, const Physics& ph, double rho, double p, const V3& u,
              const V3& B, int a);

/// Parabolic speed (4/3) mu / rho + kappa / (cv rho).
double lambda_parabolic(const Physics& ph, double rho);

/// Hydro conservative variables (rho, m, rho E) and back.
struct Prim {
  double rho;
  V3 u;
  double p;
};
struct Cons {
  double rho;
  V3 m;
  double E;
};
Cons to_cons(const Physics& ph, const Prim& w);
Prim to_prim(const Physics& ph, const Cons& q);

}  // namespace smhd
