#include "smhd/resistive.hpp"

#include <algorithm>
#include <cmath>

namespace smhd {

Field1 edge_resistivity(const MhdState& s, const SolverConfig& cfg) {
  const Grid& g = s.g();
  const std::size_t n = g.size();
  Field1 eta(g, s.phys.eta);
  if (cfg.c_eta <= 0.0) return eta;

  const Field1 m = edge_momentum(s);
  const Vec md = node_momentum(g, m);
  Vec bn;
  face_to_node(g, s.B, bn);
  Vec node_eta(3 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = s.rho.v[i];
    const V3 u{md[i] / rho, md[n + i] / rho, md[2 * n + i] / rho};
    const V3 B{bn[i], bn[n + i], bn[2 * n + i]};
    double lam_dx[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < 3; ++a)
      if (g.active(a))
        lam_dx[a] = lambda(cfg.eta_kind, s.phys, rho, std::max(s.p.v[i], 0.0), u, B, a) * g.d(a);
    for (int c = 0; c < 3; ++c) {
      const double mx = std::max(lam_dx[(c + 1) % 3], lam_dx[(c + 2) % 3]);
      node_eta[c * n + i] = 0.5 * cfg.c_eta * mx;
    }
  }
  const Field1 extra = node_to_edge(g, node_eta);
  for (std::size_t i = 0; i < eta.size(); ++i) eta.v[i] += extra.v[i];
  return eta;
}

ResistiveOperator::ResistiveOperator(const Grid& g, const Field1& eta_e, double dt, double theta)
    : g_(&g), eta_(&eta_e), c_(theta * dt) {}

void ResistiveOperator::apply(const Vec& x, Vec& y) const {
  Field2 b;
  b.n = g_->size();
  b.v = x;
  Field1 j = curl_T(*g_, b);
  for (std::size_t i = 0; i < j.size(); ++i) j.v[i] *= eta_->v[i];
  const Field2 cj = curl(*g_, j);
  const double vol = g_->vol();
  y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = vol * (x[i] + c_ * cj.v[i]);
}

SubstepStats resistive_step(MhdState& s, double dt, const SolverConfig& cfg) {
  SubstepStats st;
  if (s.phys.eta <= 0.0 && cfg.c_eta <= 0.0) return st;
  const Grid& g = s.g();
  const double th = cfg.theta_r;
  const double vol = g.vol();
  const std::size_t n = g.size();

  const Field1 eta = edge_resistivity(s, cfg);
  const Field2 Bn = s.B;
  const ResistiveOperator op(g, eta, dt, th);

  // Increment form: (I + theta dt C eta C^T) dB = -dt C(eta J^n), with J^n
  // from the ghost-closed dual curl so a uniform field carries no current.
  const Field1 jn = curl_dual(g, Bn);
  Field1 ejn = jn;
  for (std::size_t i = 0; i < ejn.size(); ++i) ejn.v[i] *= eta.v[i];
  const Field2 cjn = curl(g, ejn);
  Vec rhs(Bn.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = -vol * dt * cjn.v[i];
  Vec x(Bn.size(), 0.0);
  const CgResult r = cg_solve([&](const Vec& a, Vec& b) { op.apply(a, b); }, rhs, x, cfg.cg);
  st.cg_iters = r.iterations;
  st.solves = 1;
  st.picard = 1;

  // primal update from the theta-level current keeps div B exactly
  Field2 dB(g);
  dB.v = x;
  Field2 Bt(g);
  for (std::size_t i = 0; i < Bt.size(); ++i) Bt.v[i] = Bn.v[i] + th * x[i];
  Field1 e = curl_T(g, dB);
  for (std::size_t i = 0; i < e.size(); ++i) e.v[i] = eta.v[i] * (jn.v[i] + th * e.v[i]);
  const Field2 ce = curl(g, e);
  for (std::size_t i = 0; i < s.B.size(); ++i) s.B.v[i] = Bn.v[i] - dt * ce.v[i];

  // Poynting flux E x B at the dual faces
  std::array<Vec, 3> F;
  Vec ef, bf;
  for (int a = 0; a < 3; ++a) {
    if (!g.active(a)) continue;
    edge_at_dual_face(g, e, a, ef);
    face_at_dual_face(g, Bt, a, bf);
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    F[a].resize(n);
    for (std::size_t i = 0; i < n; ++i)
      F[a][i] = ef[b * n + i] * bf[c * n + i] - ef[c * n + i] * bf[b * n + i];
  }
  auto fp = [&](int a) -> const double* { return g.active(a) ? F[a].data() : nullptr; };
  const Vec dE = dual_div(g, fp(0), fp(1), fp(2));
  for (std::size_t i = 0; i < n; ++i) s.E.v[i] -= dt * dE[i];
  refresh_pressure(s);
  check_admissible(s, "resistive_step");
  return st;
}

}  // namespace smhd
