#include <doctest.h>

#include <cmath>
#include <random>

#include "smhd/cases.hpp"
#include "smhd/resistive.hpp"
#include "support.hpp"

using namespace smhd;
using namespace smhd::test;

TEST_CASE("resistive operator matches a dense assembly") {
  auto g = periodic_grid(3, 4, 3);
  std::mt19937_64 rng(8);
  Field1 eta(*g);
  fill_random(eta.v, rng, 0.1, 1.0);
  const double dt = 0.4, th = 0.5;
  const ResistiveOperator op(*g, eta, dt, th);
  const Dense C = dense_curl(*g);
  Dense EC = transpose(C);
  for (std::size_t r = 0; r < EC.size(); ++r)
    for (double& x : EC[r]) x *= eta.v[r];
  Dense R = matmul(C, EC);
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (double& x : R[i]) x *= th * dt * g->vol();
    R[i][i] += g->vol();
  }
  Vec x(R.size()), y;
  fill_random(x, rng);
  op.apply(x, y);
  const Vec ref = matvec(R, x);
  CHECK(max_abs_diff(y, ref) < 1e-12 * norm_inf(ref));
}

TEST_CASE("resistive step") {
  SUBCASE("no resistivity is the identity") {
    CaseSpec c = case_defaults("ot");
    c.n = {12, 12, 1};
    c.phys.eta = 0.0;
    c.cfg.c_eta = 0.0;
    MhdState s = init_case(c);
    const MhdState s0 = s;
    const SubstepStats st = resistive_step(s, 0.1, c.cfg);
    CHECK(st.solves == 0);
    CHECK(s.B.v == s0.B.v);
    CHECK(s.E.v == s0.E.v);
  }
  SUBCASE("dissipates magnetic energy into heat and keeps div B") {
    CaseSpec c = case_defaults("ot");
    c.n = {16, 16, 1};
    c.phys.eta = 0.01;
    MhdState s = init_case(c);
    const Totals t0 = totals(s);
    for (int k = 0; k < 3; ++k) resistive_step(s, 0.05, c.cfg);
    const Totals t1 = totals(s);
    CHECK(t1.e_mag < t0.e_mag);
    CHECK(std::abs(t1.energy - t0.energy) <= 1e-13 * t0.energy);
    CHECK(div_norms(s.g(), s.B).linf < 1e-12);
  }
  SUBCASE("uniform field at transmissive ends carries no current") {
    CaseSpec c = case_defaults("rp0");
    c.phys.eta = 0.5;
    MhdState s = init_case(c);
    const MhdState s0 = s;
    resistive_step(s, 1.0, c.cfg);
    CHECK(max_abs_diff(s.B.v, s0.B.v) < 1e-12);
  }
}

TEST_CASE("edge resistivity") {
  CaseSpec c = case_defaults("rp1");
  c.n = {32, 1, 1};
  c.phys.eta = 0.002;
  MhdState s = init_case(c);
  c.cfg.c_eta = 0.0;
  for (double x : edge_resistivity(s, c.cfg).v) CHECK(x == 0.002);
  c.cfg.c_eta = 1.0;
  const Field1 e = edge_resistivity(s, c.cfg);
  // x edges see only the collapsed axes: no added resistivity
  for (int i = 0; i < 32; ++i) CHECK(e.c(0)[i] == doctest::Approx(0.002));
  for (int i = 0; i < 32; ++i) CHECK(e.c(1)[i] >= 0.002);
}
