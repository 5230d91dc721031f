#include <doctest.h>

#include <cmath>
#include <random>

#include "smhd/alfven.hpp"
#include "smhd/cases.hpp"
#include "support.hpp"

using namespace smhd;
using namespace smhd::test;

TEST_CASE("Alfven operator matches a dense assembly on 4^3") {
  auto g = periodic_grid(4, 4, 4, 1.0, 1.5, 2.0);
  std::mt19937_64 rng(17);
  Field2 b(*g);
  fill_random(b.v, rng);
  Field0 rho(*g);
  fill_random(rho.v, rng, 0.5, 2.0);
  const Field1 rb = rho_bar(*g, rho);
  const CrossOp P(*g, b, CrossKind::standard);
  const double dt = 0.2, th = 0.6;
  const AlfvenOperator op(*g, rb, P, dt, th);

  const std::size_t m = 3 * g->size();
  const Dense Pd = assemble(m, m, [&](const Vec& x) {
    Field1 u(*g);
    u.v = x;
    return P.apply(u).v;
  });
  const Dense C = dense_curl(*g);
  const Dense CP = matmul(C, Pd);
  Dense A = matmul(transpose(CP), CP);
  for (std::size_t i = 0; i < m; ++i) {
    for (double& x : A[i]) x *= th * th * dt * dt * g->vol();
    A[i][i] += g->vol() * rb.v[i];
  }
  for (int t = 0; t < 3; ++t) {
    Vec x(m), y;
    fill_random(x, rng);
    op.apply(x, y);
    const Vec ref = matvec(A, x);
    CHECK(max_abs_diff(y, ref) < 1e-11 * norm_inf(ref));
  }
  // symmetric
  double asym = 0.0, amax = 0.0;
  const Dense Aop = assemble(m, m, [&](const Vec& x) {
    Vec y;
    op.apply(x, y);
    return y;
  });
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      asym = std::max(asym, std::abs(Aop[i][j] - Aop[j][i]));
      amax = std::max(amax, std::abs(Aop[i][j]));
    }
  CHECK(asym <= 1e-13 * amax);
}

TEST_CASE("Alfven step") {
  SUBCASE("B = 0 leaves the state alone") {
    CaseSpec c = case_defaults("vortex");
    c.n = {12, 12, 1};
    MhdState s = init_case(c);
    std::fill(s.B.v.begin(), s.B.v.end(), 0.0);
    init_energy(s);
    const MhdState s0 = s;
    alfven_step(s, 0.05, c.cfg);
    CHECK(max_abs_diff(s.u.v, s0.u.v) < 1e-14);
    CHECK(max_abs_diff(s.p.v, s0.p.v) < 1e-13);
    CHECK(norm_inf(s.B.v) == 0.0);
  }
  SUBCASE("div B stays at round-off and energy is conserved") {
    CaseSpec c = case_defaults("ot");
    c.n = {16, 16, 1};
    MhdState s = init_case(c);
    const Totals t0 = totals(s);
    const SubstepStats st = alfven_step(s, 0.02, c.cfg);
    const Totals t1 = totals(s);
    CHECK(st.solves >= 1);
    CHECK(div_norms(s.g(), s.B).linf < 1e-12);
    CHECK(std::abs(t1.energy - t0.energy) <= 1e-13 * t0.energy);
    CHECK(t1.mass == t0.mass);
    for (int a = 0; a < 3; ++a) CHECK(std::abs(t1.mom[a] - t0.mom[a]) <= 1e-12);
    CHECK(std::abs(t1.e_mag - t0.e_mag) > 0.0);  // the step did something
  }
}
