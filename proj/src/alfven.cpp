#include "smhd/alfven.hpp"

#include <algorithm>
#include <cmath>

namespace smhd {

AlfvenOperator::AlfvenOperator(const Grid& g, const Field1& rho_bar, const CrossOp& cross,
                               double dt, double theta)
    : g_(&g), rb_(&rho_bar), cross_(&cross), c_(theta * theta * dt * dt) {}

Field1 AlfvenOperator::stiffness(const Field1& x) const {
  return cross_->apply_t(curl_T(*g_, curl(*g_, cross_->apply(x))));
}

void AlfvenOperator::apply(const Vec& x, Vec& y) const {
  Field1 xf;
  xf.n = g_->size();
  xf.v = x;
  const Field1 k = stiffness(xf);
  const double vol = g_->vol();
  y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = vol * (rb_->v[i] * x[i] + c_ * k.v[i]);
}

SubstepStats alfven_step(MhdState& s, double dt, const SolverConfig& cfg, const Field2* B_guess,
                         const Field0* p_lag, const Field1* u_old) {
  const Grid& g = s.g();
  const double th = cfg.theta_b;
  const double vol = g.vol();
  const std::size_t n = g.size();
  SubstepStats st;

  const Field1 rb = rho_bar(g, s.rho);
  const Field2 Bn = s.B;
  const Field1 un = s.u;                  // carries the advective increment
  const Field1& u0 = u_old ? *u_old : un;  // time level n for the theta average
  // lagged pressure force: the solve sees it, the momentum update does not
  // (the acoustic step applies the implicit gradient)
  Field1 gp(g);
  if (p_lag) gp = grad(g, *p_lag);
  Field2 Bnew = B_guess ? *B_guess : Bn;
  Field2 Bt(g);
  Field1 x = un, uth(g), emf(g);
  const bool tol_policy = cfg.picard_tol > 0.0;
  const int max_solves = tol_policy ? std::max(cfg.picard_cap, 1) : cfg.s_b + 1;

  for (int it = 0; it < max_solves; ++it) {
    for (std::size_t i = 0; i < Bt.size(); ++i) Bt.v[i] = (1.0 - th) * Bn.v[i] + th * Bnew.v[i];
    const CrossOp cross(g, Bt, cfg.cross);
    const AlfvenOperator op(g, rb, cross, dt, th);

    const Field1 fB = cross.apply_t(curl_dual(g, Bn));
    const Field1 ku = op.stiffness(u0);
    Vec rhs(x.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
      rhs[i] = vol * (rb.v[i] * un.v[i] - dt * fB.v[i] - dt * gp.v[i] -
                       th * (1.0 - th) * dt * dt * ku.v[i]);

    const CgResult r = cg_solve([&](const Vec& a, Vec& b) { op.apply(a, b); }, rhs, x.v, cfg.cg);
    st.cg_iters += r.iterations;
    ++st.solves;

    for (std::size_t i = 0; i < uth.size(); ++i) uth.v[i] = th * x.v[i] + (1.0 - th) * u0.v[i];
    emf = cross.apply(uth);  // u x B at edges
    const Field2 dB = curl(g, emf);
    double change = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < dB.size(); ++i) {
      const double b = Bn.v[i] + dt * dB.v[i];
      change += (b - Bnew.v[i]) * (b - Bnew.v[i]);
      norm += b * b;
      Bnew.v[i] = b;
    }
    st.picard = it + 1;
    if (tol_policy && std::sqrt(change) <= cfg.picard_tol * std::sqrt(norm)) break;
  }

  // Conservative corrector. Fluxes at dual faces from the theta-level
  // state: Maxwell stress for momentum and the Poynting flux -(u x B) x B
  // for energy. The Poynting flux takes u x B from the same edge emf that
  // advanced B, so a velocity mode the induction cannot see does not move
  // energy either.
  for (std::size_t i = 0; i < Bt.size(); ++i) Bt.v[i] = (1.0 - th) * Bn.v[i] + th * Bnew.v[i];
  std::array<std::array<Vec, 4>, 3> F;  // [axis][mx,my,mz,E]
  Vec bf, ef;
  for (int a = 0; a < 3; ++a) {
    if (!g.active(a)) continue;
    face_at_dual_face(g, Bt, a, bf);
    edge_at_dual_face(g, emf, a, ef);
    for (auto& v : F[a]) v.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double b[3] = {bf[i], bf[n + i], bf[2 * n + i]};
      const double e[3] = {ef[i], ef[n + i], ef[2 * n + i]};
      const double b2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
      for (int c = 0; c < 3; ++c) F[a][c][i] = (c == a ? 0.5 * b2 : 0.0) - b[a] * b[c];
      const int a1 = (a + 1) % 3, a2 = (a + 2) % 3;
      F[a][3][i] = -(e[a1] * b[a2] - e[a2] * b[a1]);
    }
  }
  auto fp = [&](int a, int q) -> const double* { return g.active(a) ? F[a][q].data() : nullptr; };
  Vec dmd(3 * n);
  for (int c = 0; c < 3; ++c) {
    const Vec d = dual_div(g, fp(0, c), fp(1, c), fp(2, c));
    for (std::size_t i = 0; i < n; ++i) dmd[c * n + i] = -dt * d[i];
  }
  const Vec dE = dual_div(g, fp(0, 3), fp(1, 3), fp(2, 3));
  for (std::size_t i = 0; i < n; ++i) s.E.v[i] -= dt * dE[i];

  // hybrid momentum increment: FE increment plus the edge average of its
  // defect against the flux-form dual increment
  Field1 dme(g);
  for (std::size_t i = 0; i < dme.size(); ++i)
    dme.v[i] = rb.v[i] * (x.v[i] - un.v[i]) + dt * gp.v[i];
  const Vec dmd_fe = node_momentum(g, dme);
  for (std::size_t i = 0; i < dmd.size(); ++i) dmd[i] -= dmd_fe[i];
  const Field1 corr = node_to_edge(g, dmd);
  for (std::size_t i = 0; i < s.u.size(); ++i) s.u.v[i] = un.v[i] + (dme.v[i] + corr.v[i]) / rb.v[i];
  s.B = Bnew;
  refresh_pressure(s);
  check_admissible(s, "alfven_step");
  return st;
}

}  // namespace smhd
