#pragma once
// Shared helpers for the unit and acceptance tests: seeded random fields
// and dense matrices assembled by hand from index arithmetic, so the
// oracles do not reuse the library stencils.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "smhd/grid.hpp"
#include "smhd/field.hpp"

namespace smhd::test {

using Dense = std::vector<std::vector<double>>;  // row major

inline void fill_random(Vec& v, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  for (double& x : v) x = d(rng);
}

inline GridPtr periodic_grid(int nx, int ny, int nz, double lx = 1.0, double ly = 1.0,
                             double lz = 1.0) {
  return make_grid({nx, ny, nz}, {0.0, 0.0, 0.0}, {lx, ly, lz},
                   {Bc::periodic, Bc::periodic, Bc::periodic});
}

/// Columns of a linear map obtained by applying it to unit vectors.
inline Dense assemble(std::size_t rows, std::size_t cols,
                      const std::function<Vec(const Vec&)>& op) {
  Dense m(rows, Vec(cols, 0.0));
  Vec e(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    e[j] = 1.0;
    const Vec y = op(e);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = y[i];
    e[j] = 0.0;
  }
  return m;
}

inline Vec matvec(const Dense& m, const Vec& x) {
  Vec y(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

inline Dense transpose(const Dense& m) {
  Dense t(m.empty() ? 0 : m[0].size(), Vec(m.size(), 0.0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense c(n, Vec(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const double a_il = a[i][l];
      if (a_il == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a_il * b[l][j];
    }
  return c;
}

/// Periodic index with wrap on every axis.
inline std::size_t wrap(const Grid& g, int i, int j, int k) {
  auto w = [](int a, int n) { return ((a % n) + n) % n; };
  return g.index(w(i, g.n(0)), w(j, g.n(1)), w(k, g.n(2)));
}

/// Gradient from nodes to edges written out per component:
/// (G p)_a(i) = (p(i + e_a) - p(i)) / d_a.
inline Dense dense_grad(const Grid& g) {
  const std::size_t n = g.size();
  Dense m(3 * n, Vec(n, 0.0));
  for (int k = 0; k < g.n(2); ++k)
    for (int j = 0; j < g.n(1); ++j)
      for (int i = 0; i < g.n(0); ++i) {
        const std::size_t id = g.index(i, j, k);
        const int off[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int a = 0; a < 3; ++a) {
          if (!g.active(a)) continue;
          const std::size_t nb = wrap(g, i + off[a][0], j + off[a][1], k + off[a][2]);
          m[a * n + id][nb] += 1.0 / g.d(a);
          m[a * n + id][id] -= 1.0 / g.d(a);
        }
      }
  return m;
}

/// Curl from edges to faces: (C u)_x = d_y u_z - d_z u_y with forward
/// differences, and cyclic.
inline Dense dense_curl(const Grid& g) {
  const std::size_t n = g.size();
  Dense m(3 * n, Vec(3 * n, 0.0));
  const int off[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < g.n(2); ++k)
    for (int j = 0; j < g.n(1); ++j)
      for (int i = 0; i < g.n(0); ++i) {
        const std::size_t id = g.index(i, j, k);
        for (int c = 0; c < 3; ++c) {
          const int a = (c + 1) % 3, b = (c + 2) % 3;
          // + d_a u_b - d_b u_a
          if (g.active(a)) {
            const std::size_t nb = wrap(g, i + off[a][0], j + off[a][1], k + off[a][2]);
            m[c * n + id][b * n + nb] += 1.0 / g.d(a);
            m[c * n + id][b * n + id] -= 1.0 / g.d(a);
          }
          if (g.active(b)) {
            const std::size_t nb = wrap(g, i + off[b][0], j + off[b][1], k + off[b][2]);
            m[c * n + id][a * n + nb] -= 1.0 / g.d(b);
            m[c * n + id][a * n + id] += 1.0 / g.d(b);
          }
        }
      }
  return m;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace smhd::test
