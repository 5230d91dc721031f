#pragma once

#include "smhd/state.hpp"

namespace smhd {

/// A x = M1[rho_bar] x + theta^2 dt^2 P^T C^T M2 C P x with P frozen.
class AlfvenOperator {
 public:
  AlfvenOperator(const Grid& g, const Field1& rho_bar, const CrossOp& cross, double dt,
                 double theta);
  void apply(const Vec& x, Vec& y) const;
  /// P^T C^T C P x (no masses).
  Field1 stiffness(const Field1& x) const;

 private:
  const Grid* g_;
  const Field1* rb_;
  const CrossOp* cross_;
  double c_;
};

/// Implicit Alfven sub-step with Picard iteration on the frozen field of
/// the cross-product operator. B_guess seeds the first B^{n+1} iterate.
/// p_lag is the lagged theta-level pressure of the outer recursion: its
/// gradient enters the solve (so B is induced by a pressure-balanced
/// velocity) but is removed from the returned momentum. u_old is the
/// velocity before the advective step; the theta-level velocity averages
/// the new iterate with it, while s.u (which already holds the advective
/// increment) enters only the mass term. Defaults to s.u.
SubstepStats alfven_step(MhdState& s, double dt, const SolverConfig& cfg,
                         const Field2* B_guess = nullptr, const Field0* p_lag = nullptr,
                         const Field1* u_old = nullptr);

}  // namespace smhd
