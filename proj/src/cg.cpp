#include "smhd/cg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smhd/errors.hpp"

namespace smhd {

CgResult cg_solve(const LinearOp& A, const Vec& b, Vec& x, const CgOptions& opt) {
  const std::size_t n = b.size();
  if (x.size() != n) throw ShapeError("cg: guess and right-hand side differ in size");
  CgResult res;
  const double bnorm = norm2(b);
  if (bnorm == 0.0 && opt.abs_tol == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    res.history.push_back(0.0);
    return res;
  }
  const double tol = std::max(opt.rel_tol * bnorm, opt.abs_tol);

  Vec r(n), p(n), Ap(n);
  A(x, Ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - Ap[i];
  double rr = dot(r, r);
  res.history.push_back(std::sqrt(rr));
  if (std::sqrt(rr) <= tol) {
    res.residual = std::sqrt(rr);
    return res;
  }
  p = r;
  for (int it = 1; it <= opt.max_iter; ++it) {
    A(p, Ap);
    const double pAp = dot(p, Ap);
    if (!(pAp > 0.0))
      throw SolverError("cg: operator not positive definite (p.Ap = " + std::to_string(pAp) + ")",
                        res.history);
    const double alpha = rr / pAp;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    const double rr_new = dot(r, r);
    res.history.push_back(std::sqrt(rr_new));
    res.iterations = it;
    if (std::sqrt(rr_new) <= tol) {
      res.residual = std::sqrt(rr_new);
      return res;
    }
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  throw SolverError("cg: no convergence in " + std::to_string(opt.max_iter) + " iterations",
                    res.history);
}

}  // namespace smhd
