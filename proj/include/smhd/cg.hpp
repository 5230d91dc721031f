#pragma once

#include <functional>
#include <vector>

#include "smhd/field.hpp"

namespace smhd {

using LinearOp = std::function<void(const Vec& x, Vec& y)>;

struct CgOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_iter = 10000;
};

struct CgResult {
  int iterations = 0;
  double residual = 0.0;  // final recursive residual norm
  std::vector<double> history;
};

/// Unpreconditioned conjugate gradients for SPD A. x holds the initial guess
/// on entry. Stops when |r| <= max(rel_tol |b|, abs_tol). Throws SolverError
/// with the residual history if max_iter is exhausted or the operator is not
/// positive along a search direction.
CgResult cg_solve(const LinearOp& A, const Vec& b, Vec& x, const CgOptions& opt = {});

}  // namespace smhd
