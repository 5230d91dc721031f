#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smhd/errors.hpp"
#include "smhd/grid.hpp"

using namespace smhd;

TEST_CASE("grid spacing and DOF counts") {
  const double pi = std::numbers::pi;
  SUBCASE("Orszag-Tang grid of 500^2 on [0, 2pi]^2") {
    auto g = make_grid({500, 500, 1}, {0, 0, 0}, {2 * pi, 2 * pi, 1},
                       {Bc::periodic, Bc::periodic, Bc::periodic});
    CHECK(g->d(0) == doctest::Approx(2 * pi / 500).epsilon(1e-15));
    CHECK(g->d(1) == doctest::Approx(2 * pi / 500).epsilon(1e-15));
    CHECK(g->dim() == 2);
  }
  SUBCASE("Alfven coarse grid has 20^2 elements") {
    auto g = make_grid({20, 20, 1}, {0, 0, 0}, {2, 2, 1}, {Bc::periodic, Bc::periodic, Bc::periodic});
    CHECK(g->size() == 400);
    CHECK(g->dofs(Space::node) == 400);
    CHECK(g->dofs(Space::edge) == 1200);
    CHECK(g->dofs(Space::face) == 1200);
    CHECK(g->dofs(Space::cell) == 400);
  }
}

TEST_CASE("DOF locations follow the staggering") {
  auto g = make_grid({4, 5, 6}, {1.0, 2.0, 3.0}, {4.0, 10.0, 3.0},
                     {Bc::periodic, Bc::periodic, Bc::periodic});
  // d = (1, 2, 0.5); nodes at lo + i d
  const auto node = g->location(Space::node, 0, 2, 3, 4);
  CHECK(node[0] == doctest::Approx(3.0));
  CHECK(node[1] == doctest::Approx(8.0));
  CHECK(node[2] == doctest::Approx(5.0));
  // x-edge: whole along x, half along y and z
  const auto ex = g->location(Space::edge, 0, 2, 3, 4);
  CHECK(ex[0] == doctest::Approx(3.5));
  CHECK(ex[1] == doctest::Approx(8.0));
  CHECK(ex[2] == doctest::Approx(5.0));
  // x-face: half along x, whole along y and z
  const auto fx = g->location(Space::face, 0, 2, 3, 4);
  CHECK(fx[0] == doctest::Approx(3.0));
  CHECK(fx[1] == doctest::Approx(9.0));
  CHECK(fx[2] == doctest::Approx(5.25));
  const auto cell = g->location(Space::cell, 0, 2, 3, 4);
  CHECK(cell[0] == doctest::Approx(3.5));
  CHECK(cell[1] == doctest::Approx(9.0));
  CHECK(cell[2] == doctest::Approx(5.25));
}

TEST_CASE("neighbour tables wrap or clamp") {
  auto g = make_grid({5, 1, 1}, {0, 0, 0}, {1, 1, 1}, {Bc::transmissive, Bc::periodic, Bc::periodic});
  CHECK(g->plus(0, g->index(4, 0, 0)) == g->index(4, 0, 0));
  CHECK(g->minus(0, g->index(0, 0, 0)) == g->index(0, 0, 0));
  CHECK(g->plus(0, g->index(2, 0, 0)) == g->index(3, 0, 0));

  auto p = make_grid({5, 3, 1}, {0, 0, 0}, {1, 1, 1}, {Bc::periodic, Bc::periodic, Bc::periodic});
  CHECK(p->plus(0, p->index(4, 1, 0)) == p->index(0, 1, 0));
  CHECK(p->minus(1, p->index(2, 0, 0)) == p->index(2, 2, 0));
  CHECK(p->plus(2, p->index(2, 1, 0)) == p->index(2, 1, 0));
}

TEST_CASE("index round trip") {
  auto g = make_grid({3, 4, 5}, {0, 0, 0}, {1, 1, 1}, {Bc::periodic, Bc::periodic, Bc::periodic});
  for (std::size_t id = 0; id < g->size(); ++id) {
    const auto c = g->ijk(id);
    CHECK(g->index(c[0], c[1], c[2]) == id);
  }
}

TEST_CASE("invalid grids are rejected") {
  CHECK_THROWS_AS(make_grid({0, 1, 1}, {0, 0, 0}, {1, 1, 1}, {Bc::periodic, Bc::periodic, Bc::periodic}),
                  ConfigError);
  CHECK_THROWS_AS(Grid({4, 1, 1}, {0.1, 1, 1}, {Bc::periodic, Bc::transmissive, Bc::periodic}),
                  ConfigError);
  CHECK_THROWS_AS(Grid({4, 1, 1}, {-0.1, 1, 1}, {Bc::periodic, Bc::periodic, Bc::periodic}),
                  ConfigError);
}
