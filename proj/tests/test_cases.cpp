#include <doctest.h>

#include <cmath>

#include "smhd/cases.hpp"
#include "smhd/errors.hpp"

using namespace smhd;

TEST_CASE("case registry") {
  CHECK(case_names().size() == 13);
  CHECK(canonical_case("ot_ideal") == "ot");
  CHECK(canonical_case("iso_vortex") == "vortex");
  CHECK(canonical_case("ot_vr") == "vrot2d");
  CHECK(canonical_case("ot3d_vr") == "vrot3d");
  CHECK(canonical_case("rp2") == "rp2");
  CHECK_THROWS_AS(case_defaults("rp9"), ConfigError);
  CHECK_THROWS_AS(case_defaults("nope"), ConfigError);
  for (const std::string& n : case_names()) CHECK(case_defaults(n).name == n);
}

TEST_CASE("Riemann problem 1 initial states") {
  CaseSpec c = case_defaults("rp1");
  CHECK(c.n[0] == 1000);
  CHECK(c.tf == doctest::Approx(0.1));
  c.n = {40, 1, 1};
  const MhdState s = init_case(c);
  const std::size_t last = 39;
  CHECK(s.rho.v[0] == 1.0);
  CHECK(s.p.v[0] == 1.0);
  CHECK(s.rho.v[last] == 0.125);
  CHECK(s.p.v[last] == doctest::Approx(0.1));
  CHECK(s.B.c(0)[0] == doctest::Approx(0.75));
  CHECK(s.B.c(1)[0] == doctest::Approx(1.0));
  CHECK(s.B.c(1)[last] == doctest::Approx(-1.0));
  CHECK(norm_inf(s.u.v) == 0.0);
  // nodes sit at the dual-cell centres of [-0.5, 0.5]
  CHECK(s.g().location(Space::node, 0, 0, 0, 0)[0] == doctest::Approx(-0.5 + 0.5 / 40));
}

TEST_CASE("Orszag-Tang initial state") {
  CaseSpec c = case_defaults("ot");
  c.n = {32, 32, 1};
  const MhdState s = init_case(c);
  const double g = 5.0 / 3.0;
  for (std::size_t i = 0; i < s.rho.size(); ++i) {
    CHECK(s.rho.v[i] == doctest::Approx(g * g));
    CHECK(s.p.v[i] == doctest::Approx(g));
  }
  CHECK(div_norms(s.g(), s.B).linf < 1e-12);
}

TEST_CASE("rotor initial state") {
  CaseSpec c = case_defaults("rotor");
  CHECK(c.params.at("omega") == 10.0);
  CHECK(c.params.at("radius") == 0.1);
  c.n = {40, 40, 1};
  const MhdState s = init_case(c);
  double rmax = 0.0, rmin = 1e9;
  for (double r : s.rho.v) {
    rmax = std::max(rmax, r);
    rmin = std::min(rmin, r);
  }
  CHECK(rmax == doctest::Approx(10.0));
  CHECK(rmin == doctest::Approx(1.0));
  CHECK(div_norms(s.g(), s.B).linf < 1e-12);
}

TEST_CASE("Alfven wave starts on the exact solution") {
  CaseSpec c = case_defaults("alfven");
  c.n = {20, 20, 1};
  const MhdState s = init_case(c);
  const AlfvenErrors e = alfven_errors(c, s);
  // B comes from the curl of a sampled potential: second-order close
  CHECK(e.vx.linf < 1e-13);
  CHECK(e.vy.linf < 1e-13);
  CHECK(e.bx.linf < 0.05);
  CHECK(e.by.linf < 0.05);
  CHECK(div_norms(s.g(), s.B).linf < 1e-12);
}

TEST_CASE("3D vortex initial state is divergence free") {
  CaseSpec c = case_defaults("vrot3d");
  c.n = {8, 8, 8};
  const MhdState s = init_case(c);
  CHECK(div_norms(s.g(), s.B).linf < 1e-12);
  CHECK(s.rho.v[0] == doctest::Approx(25.0 / (36.0 * M_PI)));
}
