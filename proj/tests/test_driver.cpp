#include <doctest.h>

#include <cmath>

#include "smhd/cases.hpp"
#include "smhd/driver.hpp"
#include "smhd/errors.hpp"

using namespace smhd;

TEST_CASE("static contact takes the whole interval in one step") {
  CaseSpec c = case_defaults("rp0");
  Simulation sim(init_case(c), c.cfg, c.tf);
  const MhdState s0 = sim.state();
  CHECK(compute_dt(s0, c.cfg, c.tf) == c.tf);
  sim.run();
  CHECK(sim.history().size() == 2);  // initial record plus one step
  CHECK(sim.state().t == c.tf);
  CHECK(sim.done());
  for (std::size_t i = 0; i < s0.rho.size(); ++i) {
    CHECK(sim.state().rho.v[i] == s0.rho.v[i]);
    CHECK(sim.state().p.v[i] == doctest::Approx(s0.p.v[i]).epsilon(1e-12));
  }
  CHECK(norm_inf(sim.state().u.v) < 1e-12);
}

TEST_CASE("viscous time step") {
  CaseSpec c = case_defaults("vortex");
  c.n = {10, 20, 1};
  c.phys.mu = 0.1;
  MhdState s = init_case(c);
  for (double& x : s.rho.v) x = 2.0;
  std::fill(s.u.v.begin(), s.u.v.end(), 0.0);
  std::fill(s.B.v.begin(), s.B.v.end(), 0.0);
  const double dx = s.g().d(0), dy = s.g().d(1);
  const double lp = 4.0 / 3.0 * 0.1 / 2.0;
  const double den = 2.0 * lp * (1.0 / (dx * dx) + 1.0 / (dy * dy));
  CHECK(cfl_denominator(s, LambdaKind::v) == doctest::Approx(den).epsilon(1e-13));
  CHECK(compute_dt(s, c.cfg, 1e9) == doctest::Approx(c.cfg.cfl / den).epsilon(1e-13));
  CHECK(compute_dt(s, c.cfg, 1e-9) == doctest::Approx(1e-9));
  c.cfg.fixed_dt = 1e-3;
  CHECK(compute_dt(s, c.cfg, 1e9) == 1e-3);
}

TEST_CASE("a full step conserves on a periodic grid") {
  CaseSpec c = case_defaults("ot");
  c.n = {24, 24, 1};
  MhdState s = init_case(c);
  const StepRecord r0 = record(s, 0.0, c.cfg.cfl);
  const double dt = compute_dt(s, c.cfg, c.tf);
  const StepRecord r1 = advance(s, c.cfg, dt);
  CHECK(s.t == doctest::Approx(dt));
  CHECK(r1.dt == dt);
  CHECK(r1.cg_b > 0);
  CHECK(r1.cg_p > 0);
  CHECK(std::abs(r1.mass - r0.mass) <= 1e-13 * r0.mass);
  const double e0 = r0.e_hydro + r0.e_mag, e1 = r1.e_hydro + r1.e_mag;
  CHECK(std::abs(e1 - e0) <= 1e-12 * e0);
  for (int a = 0; a < 3; ++a) CHECK(std::abs(r1.mom[a] - r0.mom[a]) <= 1e-12);
  CHECK(r1.divb_linf < 1e-12);
  CHECK(std::isnan(r1.helicity));
  CHECK_THROWS_AS(advance(s, c.cfg, 0.0), ConfigError);
}

TEST_CASE("step count cap and growth limit") {
  CaseSpec c = case_defaults("rp1");
  c.n = {100, 1, 1};
  Simulation sim(init_case(c), c.cfg, c.tf);
  int seen = 0;
  sim.run([&](const MhdState&, StepRecord&) { ++seen; }, 4);
  CHECK(seen == 4);
  CHECK(sim.history().size() == 5);
  for (std::size_t k = 2; k < 5; ++k)
    CHECK(sim.history()[k].dt <= 1.1 * sim.history()[k - 1].dt * (1 + 1e-14));
}
