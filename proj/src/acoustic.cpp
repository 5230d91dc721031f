#include "smhd/acoustic.hpp"

#include <algorithm>
#include <cmath>

namespace smhd {

AcousticWeights acoustic_weights(const Grid& g, const Physics& ph, const Field0& rho,
                                 const Field0& p_theta, const Field1& u, double dt, double theta,
                                 double c_h) {
  AcousticWeights w{Field1(g), Field1(g)};
  const Field1 rb = rho_bar(g, rho);
  const Field1 pb = rho_bar(g, p_theta);  // same edge average
  const double gg = ph.gamma / (ph.gamma - 1.0);
  const bool stab = c_h > 0.0 && theta > 0.0;
  for (int c = 0; c < 3; ++c) {
    const double eps = 0.5 * c_h * g.d(c);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double r = rb.c(c)[i];
      const double p = std::max(pb.c(c)[i], 0.0);
      const double h = gg * p / r;
      w.h.c(c)[i] = h;
      double ht = h;
      if (stab) {
        const double v = std::abs(u.c(c)[i]);
        const double c2 = ph.gamma * p / r;
        const double sp = 0.5 * (v + std::sqrt(v * v + 4.0 * c2));
        ht += sp * eps / (theta * dt);
      }
      w.htilde.c(c)[i] = ht;
    }
  }
  return w;
}

AcousticOperator::AcousticOperator(const Grid& g, const Physics& ph, const Field1& htilde,
                                   double dt, double theta)
    : g_(&g), w_(htilde) {
  const double f = (ph.gamma - 1.0) * theta * theta * dt * dt;
  for (double& x : w_.v) x *= f;
}

void AcousticOperator::apply(const Vec& x, Vec& y) const {
  const Grid& g = *g_;
  Field0 p(g);
  p.v = x;
  Field1 gp = grad(g, p);
  for (std::size_t i = 0; i < gp.size(); ++i) gp.v[i] *= w_.v[i];
  const Field0 lap = grad_T(g, gp);
  const double vol = g.vol();
  y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = vol * (x[i] + lap.v[i]);
}

SubstepStats acoustic_step(MhdState& s, double dt, const SolverConfig& cfg,
                           const Field0* p_guess, const Field0* p_old, const Field1* m_old) {
  const Grid& g = s.g();
  const Physics& ph = s.phys;
  const double th = cfg.theta_p;
  const double gm1 = ph.gamma - 1.0;
  const double vol = g.vol();
  const std::size_t n = g.size();
  SubstepStats st;

  const Field1 rb = rho_bar(g, s.rho);
  const Field1 m0 = edge_momentum(s);
  const Field0 pn = s.p;
  const Vec ke_n = node_kinetic(g, s.u, m0);
  // time level n for the theta averages; the increments of the earlier
  // sub-steps stay in m0 and pn
  const Field0& p0 = p_old ? *p_old : pn;
  Field1 mh = m0;
  if (m_old)
    for (std::size_t i = 0; i < mh.size(); ++i) mh.v[i] = th * m0.v[i] + (1.0 - th) * m_old->v[i];

  Field0 p_it = p_guess ? *p_guess : pn;
  Field0 p_th(g);
  Field1 m_new = m0, u_it = s.u;
  Vec ke_it = ke_n;

  auto theta_level = [&](const Field0& p1) {
    for (std::size_t i = 0; i < n; ++i) p_th.v[i] = th * p1.v[i] + (1.0 - th) * p0.v[i];
  };
  auto update_momentum = [&]() {
    const Field1 gp = grad(g, p_th);
    for (std::size_t i = 0; i < m_new.size(); ++i) {
      m_new.v[i] = m0.v[i] - dt * gp.v[i];
      u_it.v[i] = m_new.v[i] / rb.v[i];
    }
    ke_it = node_kinetic(g, u_it, m_new);
  };
  if (p_guess) {
    theta_level(p_it);
    update_momentum();
  }

  AcousticWeights w{Field1(g), Field1(g)};
  const int solves = std::max(cfg.s_p, 1);
  for (int it = 0; it < solves; ++it) {
    theta_level(p_it);
    w = acoustic_weights(g, ph, s.rho, p_th, s.u, dt, th, cfg.c_h);
    const AcousticOperator op(g, ph, w.htilde, dt, th);

    // right-hand side
    Field1 hm(g), lp(g);
    const Field1 gpn = grad(g, p0);
    for (std::size_t i = 0; i < hm.size(); ++i) {
      hm.v[i] = gm1 * w.h.v[i] * mh.v[i];
      lp.v[i] = gm1 * w.htilde.v[i] * gpn.v[i];
    }
    const Field0 div_hm = grad_T(g, hm);
    const Field0 div_lp = grad_T(g, lp);
    Vec rhs(n);
    for (std::size_t i = 0; i < n; ++i)
      rhs[i] = vol * (pn.v[i] - gm1 * (ke_it[i] - ke_n[i]) + dt * div_hm.v[i] -
                      th * (1.0 - th) * dt * dt * div_lp.v[i]);

    Vec x = p_it.v;
    const CgResult r = cg_solve([&](const Vec& a, Vec& b) { op.apply(a, b); }, rhs, x, cfg.cg);
    st.cg_iters += r.iterations;
    ++st.solves;
    p_it.v = x;
    theta_level(p_it);
    update_momentum();
  }
  st.picard = solves;

  // energy corrector with the same edge flux as the pressure equation
  const Field1 gpt = grad(g, p_th);
  Field1 flux(g);
  for (std::size_t i = 0; i < flux.size(); ++i)
    flux.v[i] = w.h.v[i] * mh.v[i] - th * dt * w.htilde.v[i] * gpt.v[i];
  const Field0 dE = grad_T(g, flux);
  for (std::size_t i = 0; i < n; ++i) s.E.v[i] += dt * dE.v[i];
  s.u = u_it;
  refresh_pressure(s);
  check_admissible(s, "acoustic_step");
  return st;
}

}  // namespace smhd
