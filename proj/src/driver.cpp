#include "smhd/driver.hpp"

#include <algorithm>
#include <cmath>

#include "smhd/acoustic.hpp"
#include "smhd/alfven.hpp"
#include "smhd/errors.hpp"
#include "smhd/fv.hpp"
#include "smhd/resistive.hpp"

namespace smhd {

double cfl_denominator(const MhdState& s, LambdaKind k) {
  const Grid& g = s.g();
  const std::size_t n = g.size();
  const Field1 m = edge_momentum(s);
  const Vec md = node_momentum(g, m);
  Vec bn;
  face_to_node(g, s.B, bn);
  double lmax[3] = {0.0, 0.0, 0.0};
  double lp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = s.rho.v[i];
    const V3 u{md[i] / rho, md[n + i] / rho, md[2 * n + i] / rho};
    const V3 B{bn[i], bn[n + i], bn[2 * n + i]};
    const double p = std::max(s.p.v[i], 0.0);
    for (int a = 0; a < 3; ++a)
      if (g.active(a)) lmax[a] = std::max(lmax[a], lambda(k, s.phys, rho, p, u, B, a));
    lp = std::max(lp, lambda_parabolic(s.phys, rho));
  }
  double den = 0.0, inv2 = 0.0;
  for (int a = 0; a < 3; ++a) {
    if (!g.active(a)) continue;
    den += lmax[a] / g.d(a);
    inv2 += 1.0 / (g.d(a) * g.d(a));
  }
  return den + 2.0 * lp * inv2;
}

double compute_dt(const MhdState& s, const SolverConfig& cfg, double tf) {
  const double rest = tf - s.t;
  if (cfg.fixed_dt > 0.0) return std::min(cfg.fixed_dt, rest);
  const double den = cfl_denominator(s, cfg.dt_kind);
  if (!(den > 0.0)) return rest;
  return std::min(cfg.cfl / den, rest);
}

StepRecord record(const MhdState& s, double dt, double cfl) {
  StepRecord r;
  const Totals t = totals(s);
  const DivNorms d = div_norms(s.g(), s.B);
  r.t = s.t;
  r.dt = dt;
  const double den = cfl_denominator(s, LambdaKind::mhd);
  r.eff_courant = dt * den / cfl;
  r.mass = t.mass;
  r.mom = t.mom;
  r.e_mag = t.e_mag;
  r.e_hydro = t.energy - t.e_mag;
  r.divb_l2 = d.l2;
  r.divb_linf = d.linf;
  return r;
}

StepRecord advance(MhdState& s, const SolverConfig& cfg, double dt) {
  if (!(dt > 0.0)) throw ConfigError("advance: non-positive time step");
  int cg_b = 0, cg_p = 0, cg_r = 0, picard = 0;

  SubstepStats r = resistive_step(s, 0.5 * dt, cfg);
  cg_r += r.cg_iters;

  const Field1 u_old = s.u;
  const Field1 m_old = edge_momentum(s);
  const Field0 p_old = s.p;
  fv_step(s, dt, cfg);

  // Outer recursion r = 1..R. Each round restarts from the post-advection
  // state; the Alfven solve sees the lagged theta-level pressure of the
  // previous round (the post-advection pressure in the first round).
  const int outer = std::max(cfg.outer_r, 1);
  const MhdState base = s;
  Field0 p_lag = s.p;
  Field2 b_it = s.B;
  Field0 p_it = s.p;
  for (int k = 0; k < outer; ++k) {
    MhdState w = base;
    const SubstepStats b = alfven_step(w, dt, cfg, k == 0 ? nullptr : &b_it, &p_lag, &u_old);
    const SubstepStats p = acoustic_step(w, dt, cfg, k == 0 ? nullptr : &p_it, &p_old, &m_old);
    cg_b += b.cg_iters;
    cg_p += p.cg_iters;
    picard += b.picard;
    b_it = w.B;
    p_it = w.p;
    for (std::size_t i = 0; i < p_lag.size(); ++i)
      p_lag.v[i] = cfg.theta_p * p_it.v[i] + (1.0 - cfg.theta_p) * p_old.v[i];
    s = std::move(w);
  }

  r = resistive_step(s, 0.5 * dt, cfg);
  cg_r += r.cg_iters;

  s.t += dt;
  StepRecord rec = record(s, dt, cfg.cfl);
  rec.cg_b = cg_b;
  rec.cg_p = cg_p;
  rec.cg_r = cg_r;
  rec.picard = picard;
  for (double p : s.p.v)
    if (p < 0.0) ++rec.neg_p;
  return rec;
}

Simulation::Simulation(MhdState s, SolverConfig cfg, double tf)
    : s_(std::move(s)), cfg_(cfg), tf_(tf) {
  check_admissible(s_, "simulation");
  StepRecord r0 = record(s_, 0.0, cfg_.cfl);
  hist_.push_back(r0);
}

bool Simulation::done() const { return !(s_.t < tf_ * (1.0 - 1e-14)); }

const StepRecord& Simulation::step() {
  double dt = compute_dt(s_, cfg_, tf_);
  if (cfg_.dt_growth > 0.0 && cfg_.fixed_dt <= 0.0) {
    double cap = dt;
    if (dt_prev_ > 0.0) {
      cap = cfg_.dt_growth * dt_prev_;
    } else {
      const double den = cfl_denominator(s_, LambdaKind::mhd);
      if (den > 0.0) cap = cfg_.cfl / den;
    }
    dt = std::min(dt, cap);
  }
  hist_.push_back(advance(s_, cfg_, dt));
  dt_prev_ = dt;
  return hist_.back();
}

void Simulation::run(const std::function<void(const MhdState&, StepRecord&)>& observer,
                     long max_steps) {
  long k = 0;
  while (!done() && (max_steps < 0 || k < max_steps)) {
    step();
    if (observer) observer(s_, hist_.back());
    ++k;
  }
}

}  // namespace smhd
