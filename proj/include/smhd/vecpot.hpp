#pragma once

#include "smhd/state.hpp"

namespace smhd {

struct VecPotOptions {
  double tol = 1e-12;     // stop when |dA| / |A| <= tol
  double tau = 0.0;       // pseudo-time step; 0 means the implicit limit
  int max_relax = 50;
  CgOptions cg{1e-10, 0.0, 20000};
};

struct VecPotResult {
  Field1 A;
  int relax_iters = 0;
  int cg_iters = 0;
  double rel_change = 0.0;
};

/// Coulomb-gauge vector potential with C A = B on a fully periodic grid,
/// by implicit pseudo-time relaxation of (C^T C + G G^T) A = C^T B.
/// Throws ConfigError for non-periodic grids or B with a mean component.
VecPotResult vector_potential(const Grid& g, const Field2& B, const VecPotOptions& opt = {},
                              const Field1* guess = nullptr);

/// Magnetic helicity vol * sum A . P1 B.
double helicity(const Grid& g, const Field1& A, const Field2& B);

}  // namespace smhd
