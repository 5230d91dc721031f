#include "smhd/vecpot.hpp"

#include <cmath>
#include <string>

#include "smhd/errors.hpp"

namespace smhd {

namespace {

Field1 vector_laplacian(const Grid& g, const Field1& a) {
  Field1 out = curl_T(g, curl(g, a));
  const Field1 gg = grad(g, grad_T(g, a));
  for (std::size_t i = 0; i < out.size(); ++i) out.v[i] += gg.v[i];
  return out;
}

}  // namespace

VecPotResult vector_potential(const Grid& g, const Field2& B, const VecPotOptions& opt,
                              const Field1* guess) {
  if (!g.all_periodic()) throw ConfigError("vector potential: requires a periodic grid");
  double rms = 0.0;
  for (double x : B.v) rms += x * x;
  rms = std::sqrt(rms / B.size());
  for (int c = 0; c < 3; ++c) {
    double mean = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) mean += B.c(c)[i];
    mean /= g.size();
    if (std::abs(mean) > 1e-12 * std::max(rms, 1e-300))
      throw ConfigError("vector potential: B has a uniform component along axis " +
                        std::to_string(c) + "; helicity is gauge dependent");
  }

  VecPotResult res;
  res.A = guess ? *guess : Field1(g);
  const Field1 rhs = curl_T(g, B);
  const double inv_tau = opt.tau > 0.0 ? 1.0 / opt.tau : 0.0;
  auto op = [&](const Vec& x, Vec& y) {
    Field1 f;
    f.n = g.size();
    f.v = x;
    const Field1 l = vector_laplacian(g, f);
    y.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = inv_tau * x[i] + l.v[i];
  };

  // Later corrections see a residual near round-off; an absolute floor tied
  // to the first right-hand side keeps CG from chasing it.
  CgOptions cgo = opt.cg;
  cgo.abs_tol = std::max(cgo.abs_tol, 1e-13 * norm2(rhs.v));
  const std::size_t n = g.size();
  for (int it = 1; it <= opt.max_relax; ++it) {
    const Field1 la = vector_laplacian(g, res.A);
    Vec r(rhs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rhs.v[i] - la.v[i];
    // uniform components are in the null space of the operator
    for (int c = 0; c < 3; ++c) {
      double mean = 0.0;
      for (std::size_t i = 0; i < n; ++i) mean += r[c * n + i];
      mean /= static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) r[c * n + i] -= mean;
    }
    Vec dA(r.size(), 0.0);
    const CgResult cr = cg_solve(op, r, dA, cgo);
    res.cg_iters += cr.iterations;
    axpy(1.0, dA, res.A.v);
    res.relax_iters = it;
    const double na = norm2(res.A.v);
    res.rel_change = na > 0.0 ? norm2(dA) / na : 0.0;
    if (res.rel_change <= opt.tol) break;
  }
  return res;
}

double helicity(const Grid& g, const Field1& A, const Field2& B) {
  return g.vol() * dot(A.v, project_p1(g, B).v);
}

}  // namespace smhd
