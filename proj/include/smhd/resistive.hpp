#pragma once

#include "smhd/state.hpp"

namespace smhd {

/// Edge resistivity eta + eta~_c with
/// eta~_c = c_eta max(lambda_j dx_j, lambda_k dx_k) / 2 over the other axes.
Field1 edge_resistivity(const MhdState& s, const SolverConfig& cfg);

/// R x = M2 x + theta dt C M1[eta] C^T x on face DOFs.
class ResistiveOperator {
 public:
  ResistiveOperator(const Grid& g, const Field1& eta_e, double dt, double theta);
  void apply(const Vec& x, Vec& y) const;

 private:
  const Grid* g_;
  const Field1* eta_;
  double c_;
};

/// Crank-Nicolson type resistive update over dt (called with dt/2 in the
/// Strang splitting). Skipped when eta and c_eta are both zero.
SubstepStats resistive_step(MhdState& s, double dt, const SolverConfig& cfg);

}  // namespace smhd
