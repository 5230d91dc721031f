#pragma once

#include "smhd/state.hpp"

namespace smhd {

/// Edge weights of the pressure system: h = gamma/(gamma-1) p/rho clipped
/// at zero, and h~ = h + s_p eps / (theta dt) with eps = c_h dx / 2.
struct AcousticWeights {
  Field1 h;
  Field1 htilde;
};

AcousticWeights acoustic_weights(const Grid& g, const Physics& ph, const Field0& rho,
                                 const Field0& p_theta, const Field1& u, double dt, double theta,
                                 double c_h);

/// H x = M0 x + theta^2 dt^2 G^T M1[(gamma-1) h~] G x.
class AcousticOperator {
 public:
  AcousticOperator(const Grid& g, const Physics& ph, const Field1& htilde, double dt, double theta);
  void apply(const Vec& x, Vec& y) const;

 private:
  const Grid* g_;
  Field1 w_;  // (gamma-1) h~ theta^2 dt^2 (per unit volume)
};

/// Implicit pressure sub-step (Picard over s_p solves). Updates u, p and
/// the energy ledger; rho is unchanged. p_guess seeds the first iterate.
/// p_old and m_old are pressure and edge momentum before the advective
/// step: the theta-level pressure and energy-flux momentum average the new
/// values with them. Both default to the current state.
SubstepStats acoustic_step(MhdState& s, double dt, const SolverConfig& cfg,
                           const Field0* p_guess = nullptr, const Field0* p_old = nullptr,
                           const Field1* m_old = nullptr);

}  // namespace smhd
