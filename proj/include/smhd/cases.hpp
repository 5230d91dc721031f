#pragma once

#include <map>
#include <string>
#include <vector>

#include "smhd/state.hpp"

namespace smhd {

/// Complete description of a run: physics, grid, time horizon, solver
/// defaults and case parameters (amplitudes, radii, ...).
struct CaseSpec {
  std::string name;
  Physics phys;
  double prandtl = 0.0;  // > 0: kappa = mu gamma cv / Pr
  std::array<int, 3> n{1, 1, 1};
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> len{1.0, 1.0, 1.0};
  std::array<Bc, 3> bc{Bc::periodic, Bc::periodic, Bc::periodic};
  bool shift_nodes = false;  // nodes at dual-cell centres of [lo, lo+len]
  double tf = 1.0;
  SolverConfig cfg;
  std::map<std::string, double> params;
};

std::vector<std::string> case_names();
/// Maps the long aliases (ot_ideal, iso_vortex, ot_vr, ot3d_vr) to the
/// short names; other names pass through.
std::string canonical_case(const std::string& name);
/// Defaults of a named case; throws ConfigError for unknown names.
CaseSpec case_defaults(const std::string& name);
GridPtr case_grid(const CaseSpec& c);
/// Initial state: rho, p at nodes, u at edge midpoints, B from the discrete
/// curl of a sampled vector potential plus directly sampled parts that are
/// discretely divergence free (uniform fields, collapsed-axis components).
MhdState init_case(const CaseSpec& c);

/// Exact planar Alfven wave (v, B) at x, t.
void alfven_exact(const CaseSpec& c, const V3& x, double t, V3& v, V3& B);

struct Norms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};
struct AlfvenErrors {
  Norms vx, vy, bx, by;
};
/// DOF-pointwise errors against the exact wave at time s.t.
AlfvenErrors alfven_errors(const CaseSpec& c, const MhdState& s);

}  // namespace smhd
