#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "smhd/grid.hpp"

namespace smhd {

using Vec = std::vector<double>;

/// DOF array tagged with its space. Vector spaces (edge, face) store the
/// three components as consecutive blocks of grid.size() values.
template <Space S>
struct Field {
  static constexpr Space space = S;
  static constexpr int ncomp = (S == Space::edge || S == Space::face) ? 3 : 1;

  Field() = default;
  explicit Field(const Grid& g, double value = 0.0) : n(g.size()), v(g.size() * ncomp, value) {}

  std::size_t n = 0;  // per component
  Vec v;

  double* c(int comp) { return v.data() + comp * n; }
  const double* c(int comp) const { return v.data() + comp * n; }
  std::span<double> comp(int k) { return {c(k), n}; }
  std::span<const double> comp(int k) const { return {c(k), n}; }
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  std::size_t size() const { return v.size(); }
};

using Field0 = Field<Space::node>;
using Field1 = Field<Space::edge>;
using Field2 = Field<Space::face>;
using Field3 = Field<Space::cell>;

/// Cell-centred 3-vector (quadrature values of the cross product).
struct CellVec {
  CellVec() = default;
  explicit CellVec(const Grid& g) : n(g.size()), v(3 * g.size(), 0.0) {}
  std::size_t n = 0;
  Vec v;
  double* c(int k) { return v.data() + k * n; }
  const double* c(int k) const { return v.data() + k * n; }
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm_inf(const Vec& a);
/// y += alpha x
void axpy(double alpha, const Vec& x, Vec& y);

}  // namespace smhd
