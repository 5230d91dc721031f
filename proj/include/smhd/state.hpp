#pragma once

#include <string>

#include "smhd/cg.hpp"
#include "smhd/field.hpp"
#include "smhd/grid.hpp"
#include "smhd/operators.hpp"
#include "smhd/physics.hpp"

namespace smhd {

/// Mixed FE/FV state. rho, p and the total-energy ledger E live on nodes
/// (dual cells), velocity on edges, B on faces.
struct MhdState {
  GridPtr grid;
  Physics phys;
  Field0 rho, p, E;
  Field1 u;
  Field2 B;
  double t = 0.0;

  const Grid& g() const { return *grid; }
};

enum class FluxKind { rusanov, upwind };
enum class Recon { first, muscl, centered, feec };

struct SolverConfig {
  double theta_p = 1.0;
  double theta_b = 1.0;
  double theta_r = 1.0;  // resistive sub-step
  double cfl = 0.9;
  LambdaKind dt_kind = LambdaKind::v;
  LambdaKind flux_speed = LambdaKind::v;
  FluxKind flux = FluxKind::rusanov;
  Recon recon = Recon::muscl;
  int outer_r = 1;
  int s_p = 1;
  int s_b = 0;
  double picard_tol = 0.0;  // > 0 selects the tolerance policy for B
  int picard_cap = 50;
  double c_h = 0.0;
  double c_eta = 0.0;
  LambdaKind eta_kind = LambdaKind::v;
  CrossKind cross = CrossKind::standard;
  double dt_growth = 0.0;  // > 0: first step from lambda^MHD, then growth cap
  double fixed_dt = 0.0;   // > 0 overrides the CFL step
  CgOptions cg;
};

/// Cost counters of one sub-step.
struct SubstepStats {
  int cg_iters = 0;
  int solves = 0;
  int picard = 0;
};

/// m_e = rho_bar * u on edges.
Field1 edge_momentum(const MhdState& s);
/// Nodal kinetic energy (1/2) avg_6edges(u m).
Vec node_kinetic(const Grid& g, const Field1& u, const Field1& m);
/// Nodal magnetic energy with sum over nodes equal to (1/2) sum B^2.
Vec node_magnetic(const Grid& g, const Field2& B);
/// Dual-cell momentum A_n(m_e), three blocks.
Vec node_momentum(const Grid& g, const Field1& m);

/// Ledger from p: E = p/(gamma-1) + KE_node + ME_node.
void init_energy(MhdState& s);
/// p from the ledger. Returns the number of nodes with p < 0.
int refresh_pressure(MhdState& s);
/// Throws StateError for rho <= 0 or non-finite values.
void check_admissible(const MhdState& s, const char* where);

/// Dual-cell divergence of fluxes given at the dual faces (edge centres).
/// A transmissive end contributes no net flux.
Vec dual_div(const Grid& g, const double* fx, const double* fy, const double* fz);

/// Values of an edge / face field at the centres of a-edges (dual faces).
void edge_at_dual_face(const Grid& g, const Field1& u, int a, Vec& out3);
void face_at_dual_face(const Grid& g, const Field2& b, int a, Vec& out3);

struct Totals {
  double mass = 0.0;
  V3 mom{0.0, 0.0, 0.0};
  double energy = 0.0;
  double e_mag = 0.0;
  double e_kin = 0.0;
};
Totals totals(const MhdState& s);

struct DivNorms {
  double l2 = 0.0;
  double linf = 0.0;
};
DivNorms div_norms(const Grid& g, const Field2& B);

}  // namespace smhd
