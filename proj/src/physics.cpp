#include "smhd/physics.hpp"

#include <algorithm>
#include <cmath>

#include "smhd/errors.hpp"

namespace smhd {

Thermo thermo(const Physics& ph, double rho, double p) {
  if (!(rho > 0.0)) throw StateError("thermo: non-positive density");
  if (!(p >= 0.0)) throw StateError("thermo: negative pressure");
  const double g = ph.gamma;
  Thermo t{};
  t.e = p / ((g - 1.0) * rho);
  t.h = g * p / ((g - 1.0) * rho);
  t.T = t.e / ph.cv;
  t.c = std::sqrt(g * p / rho);
  return t;
}

WaveSpeeds wave_speeds(const Physics& ph, double rho, double p, const V3& B, int a) {
  if (!(rho > 0.0)) throw StateError("wave_speeds: non-positive density");
  const double c2 = ph.gamma * std::max(p, 0.0) / rho;
  const double b2 = (B[0] * B[0] + B[1] * B[1] + B[2] * B[2]) / rho;
  const double ca2 = B[a] * B[a] / rho;
  const double s = b2 + c2;
  const double disc = std::sqrt(std::max(s * s - 4.0 * c2 * ca2, 0.0));
  WaveSpeeds w{};
  w.c = std::sqrt(c2);
  w.ca = std::sqrt(ca2);
  w.cf = std::sqrt(0.5 * (s + disc));
  // cs^2 cf^2 = c^2 ca^2 avoids cancellation in the slow root
  w.cs = w.cf > 0.0 ? std::sqrt(c2 * ca2) / w.cf : 0.0;
  return w;
}

double lambda(LambdaKind k, const Physics& ph, double rho, double p, const V3& u,
              const V3& B, int a) {
  const double v = std::abs(u[a]);
  switch (k) {
    case LambdaKind::v:
      return v;
    case LambdaKind::p: {
      const double c2 = ph.gamma * std::max(p, 0.0) / rho;
      return 0.5 * (v + std::sqrt(v * v + 4.0 * c2));
    }
    case LambdaKind::b: {
      const double b2 = (B[0] * B[0] + B[1] * B[1] + B[2] * B[2]) / rho;
      return 0.5 * (v + std::sqrt(v * v + 4.0 * b2));
    }
    case LambdaKind::mhd:
      return v + wave_speeds(ph, rho, p, B, a).cf;
  }
  return v;
}

double lambda_parabolic(const Physics& ph, double rho) {
  return (4.0 / 3.0) * ph.mu / rho + ph.kappa / (ph.cv * rho);
}

Cons to_cons(const Physics& ph, const Prim& w) {
  Cons q{};
  q.rho = w.rho;
  double ke = 0.0;
  for (int c = 0; c < 3; ++c) {
    q.m[c] = w.rho * w.u[c];
    ke += w.u[c] * w.u[c];
  }
  q.E = w.p / (ph.gamma - 1.0) + 0.5 * w.rho * ke;
  return q;
}

Prim to_prim(const Physics& ph, const Cons& q) {
  if (!(q.rho > 0.0)) throw StateError("to_prim: non-positive density");
  Prim w{};
  w.rho = q.rho;
  double ke = 0.0;
  for (int c = 0; c < 3; ++c) {
    w.u[c] = q.m[c] / q.rho;
    ke += w.u[c] * q.m[c];
  }
  w.p = (ph.gamma - 1.0) * (q.E - 0.5 * ke);
  return w;
}

}  // namespace smhd
