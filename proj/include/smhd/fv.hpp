#pragma once

#include <array>

#include "smhd/state.hpp"

namespace smhd {

/// Hydro variables carried by the FV step on one dual cell:
/// rho, m_x, m_y, m_z, E (energy row transports kinetic energy only).
using FvVec = std::array<double, 5>;

/// Physical flux of the advective operator along axis a.
FvVec advective_flux(const FvVec& w, int a);

/// Rusanov flux with speed s, or upwind flux by the mean normal velocity.
FvVec rusanov_flux(const FvVec& wl, const FvVec& wr, double s, int a);
FvVec upwind_flux(const FvVec& wl, const FvVec& wr, int a);

double minmod(double a, double b);

struct FvStats {
  int fallback_faces = 0;
};

/// Explicit advective + diffusive update over dt (MUSCL-Hancock,
/// centred, first-order or FE reconstruction). Edge velocities receive the
/// dual-cell momentum increments through the edge average.
FvStats fv_step(MhdState& s, double dt, const SolverConfig& cfg);

}  // namespace smhd
