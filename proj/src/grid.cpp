#include "smhd/grid.hpp"

#include <cmath>
#include <string>

#include "smhd/errors.hpp"

namespace smhd {

Stagger stagger_of(Space s, int comp) {
  switch (s) {
    case Space::node:
      return {true, true, true};
    case Space::cell:
      return {false, false, false};
    case Space::edge: {
      Stagger st{true, true, true};
      st[comp] = false;
      return st;
    }
    case Space::face: {
      Stagger st{false, false, false};
      st[comp] = true;
      return st;
    }
  }
  return {false, false, false};
}

Grid::Grid(std::array<int, 3> n, std::array<double, 3> d, std::array<Bc, 3> bc,
           std::array<double, 3> origin)
    : n_(n), d_(d), bc_(bc), origin_(origin) {
  for (int a = 0; a < 3; ++a) {
    if (n_[a] < 1) throw ConfigError("grid: axis " + std::to_string(a) + " has no cells");
    if (!(d_[a] > 0.0) || !std::isfinite(d_[a]))
      throw ConfigError("grid: axis " + std::to_string(a) + " has non-positive spacing");
    if (n_[a] == 1 && bc_[a] != Bc::periodic)
      throw ConfigError("grid: collapsed axis " + std::to_string(a) + " must be periodic");
  }
  size_ = static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  for (int a = 0; a < 3; ++a) {
    plus_[a].resize(size_);
    minus_[a].resize(size_);
  }
  for (int k = 0; k < n_[2]; ++k)
    for (int j = 0; j < n_[1]; ++j)
      for (int i = 0; i < n_[0]; ++i) {
        const std::array<int, 3> c{i, j, k};
        const std::size_t id = index(i, j, k);
        for (int a = 0; a < 3; ++a) {
          std::array<int, 3> p = c, m = c;
          if (bc_[a] == Bc::periodic) {
            p[a] = (c[a] + 1) % n_[a];
            m[a] = (c[a] + n_[a] - 1) % n_[a];
          } else {
            p[a] = std::min(c[a] + 1, n_[a] - 1);
            m[a] = std::max(c[a] - 1, 0);
          }
          plus_[a][id] = index(p[0], p[1], p[2]);
          minus_[a][id] = index(m[0], m[1], m[2]);
        }
      }
}

int Grid::dim() const { return int(active(0)) + int(active(1)) + int(active(2)); }

bool Grid::all_periodic() const {
  return bc_[0] == Bc::periodic && bc_[1] == Bc::periodic && bc_[2] == Bc::periodic;
}

std::array<int, 3> Grid::ijk(std::size_t idx) const {
  const int i = static_cast<int>(idx % n_[0]);
  idx /= n_[0];
  const int j = static_cast<int>(idx % n_[1]);
  const int k = static_cast<int>(idx / n_[1]);
  return {i, j, k};
}

std::size_t Grid::dofs(Space s) const {
  return (s == Space::edge || s == Space::face) ? 3 * size_ : size_;
}

std::array<double, 3> Grid::location(Stagger st, int i, int j, int k) const {
  const std::array<int, 3> c{i, j, k};
  std::array<double, 3> x{};
  for (int a = 0; a < 3; ++a) x[a] = origin_[a] + (c[a] - (st[a] ? 0.5 : 0.0)) * d_[a];
  return x;
}

std::array<double, 3> Grid::location(Space s, int comp, int i, int j, int k) const {
  return location(stagger_of(s, comp), i, j, k);
}

GridPtr make_grid(std::array<int, 3> n, std::array<double, 3> lo,
                  std::array<double, 3> len, std::array<Bc, 3> bc) {
  std::array<double, 3> d{}, origin{};
  for (int a = 0; a < 3; ++a) {
    if (n[a] < 1) throw ConfigError("grid: axis " + std::to_string(a) + " has no cells");
    d[a] = len[a] / n[a];
    origin[a] = lo[a] + 0.5 * d[a];
  }
  return std::make_shared<const Grid>(n, d, bc, origin);
}

}  // namespace smhd
