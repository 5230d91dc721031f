#include "smhd/operators.hpp"

#include <algorithm>
#include <cmath>

namespace smhd {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Vec& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

void axpy(double alpha, const Vec& x, Vec& y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

// The transposes below are written as gathers over the same neighbour
// tables, so each is the exact matrix transpose of its forward operator,
// including the clamped rows at transmissive ends.

void avg_plus(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (f[i] + f[g.plus(a, i)]);
}

void avg_plus_t(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = g.minus(a, i), p = g.plus(a, i);
    double s = 0.5 * f[i];
    if (m != i) s += 0.5 * f[m];
    if (p == i) s += 0.5 * f[i];
    out[i] = s;
  }
}

void avg_minus(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (f[g.minus(a, i)] + f[i]);
}

void avg_minus_t(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = g.minus(a, i), p = g.plus(a, i);
    double s = 0.5 * f[i];
    if (p != i) s += 0.5 * f[p];
    if (m == i) s += 0.5 * f[i];
    out[i] = s;
  }
}

void diff_plus(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  const double inv = 1.0 / g.d(a);
  for (std::size_t i = 0; i < n; ++i) out[i] = (f[g.plus(a, i)] - f[i]) * inv;
}

void diff_plus_t(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  const double inv = 1.0 / g.d(a);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = g.minus(a, i), p = g.plus(a, i);
    double s = 0.0;
    if (m != i) s += f[m];
    if (p != i) s -= f[i];
    out[i] = s * inv;
  }
}

void diff_dual(const Grid& g, int a, const double* f, double* out) {
  const std::size_t n = g.size();
  const double inv = 1.0 / g.d(a);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = g.minus(a, i);
    out[i] = m == i ? 0.0 : (f[m] - f[i]) * inv;
  }
}

void transfer(const Grid& g, Stagger from, Stagger to, const double* f, double* out) {
  const std::size_t n = g.size();
  Vec tmp(f, f + n), nxt(n);
  for (int a = 0; a < 3; ++a) {
    if (from[a] == to[a] || !g.active(a)) continue;
    if (from[a])
      avg_plus(g, a, tmp.data(), nxt.data());
    else
      avg_minus(g, a, tmp.data(), nxt.data());
    tmp.swap(nxt);
  }
  std::copy(tmp.begin(), tmp.end(), out);
}

void transfer_t(const Grid& g, Stagger from, Stagger to, const double* f, double* out) {
  const std::size_t n = g.size();
  Vec tmp(f, f + n), nxt(n);
  for (int a = 2; a >= 0; --a) {
    if (from[a] == to[a] || !g.active(a)) continue;
    if (from[a])
      avg_plus_t(g, a, tmp.data(), nxt.data());
    else
      avg_minus_t(g, a, tmp.data(), nxt.data());
    tmp.swap(nxt);
  }
  std::copy(tmp.begin(), tmp.end(), out);
}

Field1 grad(const Grid& g, const Field0& p) {
  Field1 out(g);
  for (int a = 0; a < 3; ++a) diff_plus(g, a, p.c(0), out.c(a));
  return out;
}

Field2 curl(const Grid& g, const Field1& u) {
  Field2 out(g);
  const std::size_t n = g.size();
  Vec t1(n), t2(n);
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    // (curl u)_c = d_a u_b - d_b u_a
    diff_plus(g, a, u.c(b), t1.data());
    diff_plus(g, b, u.c(a), t2.data());
    double* o = out.c(c);
    for (std::size_t i = 0; i < n; ++i) o[i] = t1[i] - t2[i];
  }
  return out;
}

Field3 div(const Grid& g, const Field2& b) {
  Field3 out(g);
  const std::size_t n = g.size();
  Vec t(n);
  for (int a = 0; a < 3; ++a) {
    diff_plus(g, a, b.c(a), t.data());
    for (std::size_t i = 0; i < n; ++i) out.v[i] += t[i];
  }
  return out;
}

Field0 grad_T(const Grid& g, const Field1& y) {
  Field0 out(g);
  const std::size_t n = g.size();
  Vec t(n);
  for (int a = 0; a < 3; ++a) {
    diff_plus_t(g, a, y.c(a), t.data());
    for (std::size_t i = 0; i < n; ++i) out.v[i] += t[i];
  }
  return out;
}

Field1 curl_T(const Grid& g, const Field2& y) {
  Field1 out(g);
  const std::size_t n = g.size();
  Vec t(n);
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    // y_c multiplies d_a u_b (+) and d_b u_a (-)
    diff_plus_t(g, a, y.c(c), t.data());
    for (std::size_t i = 0; i < n; ++i) out.c(b)[i] += t[i];
    diff_plus_t(g, b, y.c(c), t.data());
    for (std::size_t i = 0; i < n; ++i) out.c(a)[i] -= t[i];
  }
  return out;
}

Field1 curl_dual(const Grid& g, const Field2& y) {
  Field1 out(g);
  const std::size_t n = g.size();
  Vec t(n);
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    diff_dual(g, a, y.c(c), t.data());
    for (std::size_t i = 0; i < n; ++i) out.c(b)[i] += t[i];
    diff_dual(g, b, y.c(c), t.data());
    for (std::size_t i = 0; i < n; ++i) out.c(a)[i] -= t[i];
  }
  return out;
}

Field2 div_T(const Grid& g, const Field3& y) {
  Field2 out(g);
  for (int a = 0; a < 3; ++a) diff_plus_t(g, a, y.c(0), out.c(a));
  return out;
}

Field1 project_p1(const Grid& g, const Field2& b) {
  Field1 out(g);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::face, c), stagger_of(Space::edge, c), b.c(c), out.c(c));
  return out;
}

CellVec edge_to_cell(const Grid& g, const Field1& u) {
  CellVec out(g);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::edge, c), stagger_of(Space::cell, 0), u.c(c), out.c(c));
  return out;
}

Field1 edge_to_cell_t(const Grid& g, const CellVec& w) {
  Field1 out(g);
  for (int c = 0; c < 3; ++c)
    transfer_t(g, stagger_of(Space::edge, c), stagger_of(Space::cell, 0), w.c(c), out.c(c));
  return out;
}

CellVec face_to_cell(const Grid& g, const Field2& b) {
  CellVec out(g);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::face, c), stagger_of(Space::cell, 0), b.c(c), out.c(c));
  return out;
}

void edge_to_node(const Grid& g, const Field1& u, Vec& out3) {
  const std::size_t n = g.size();
  out3.assign(3 * n, 0.0);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::edge, c), stagger_of(Space::node, 0), u.c(c), out3.data() + c * n);
}

void face_to_node(const Grid& g, const Field2& b, Vec& out3) {
  const std::size_t n = g.size();
  out3.assign(3 * n, 0.0);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::face, c), stagger_of(Space::node, 0), b.c(c), out3.data() + c * n);
}

Field1 node_to_edge(const Grid& g, const Vec& node3) {
  Field1 out(g);
  const std::size_t n = g.size();
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::node, 0), stagger_of(Space::edge, c), node3.data() + c * n, out.c(c));
  return out;
}

Field1 rho_bar(const Grid& g, const Field0& rho) {
  Field1 out(g);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::node, 0), stagger_of(Space::edge, c), rho.c(0), out.c(c));
  return out;
}

CrossOp::CrossOp(const Grid& g, const Field2& b, CrossKind kind)
    : g_(&g), kind_(kind) {
  if (kind == CrossKind::orthogonal)
    b_ = edge_to_cell(g, project_p1(g, b));
  else
    bf_ = b;
}

namespace {
void cross_cells(const CellVec& u, const CellVec& b, CellVec& out) {
  const std::size_t n = u.n;
  const double *ux = u.c(0), *uy = u.c(1), *uz = u.c(2);
  const double *bx = b.c(0), *by = b.c(1), *bz = b.c(2);
  double *ox = out.c(0), *oy = out.c(1), *oz = out.c(2);
  for (std::size_t i = 0; i < n; ++i) {
    ox[i] = uy[i] * bz[i] - uz[i] * by[i];
    oy[i] = uz[i] * bx[i] - ux[i] * bz[i];
    oz[i] = ux[i] * by[i] - uy[i] * bx[i];
  }
}

// Face quadrature: the term u_b B_c of (u x B)_a is formed on the c-faces,
// where B_c lives, with u_a and u_b moved there by a single 2-point mean.
Field1 cross_faces(const Grid& g, const Field2& bf, const Field1& u) {
  Field1 out(g);
  const std::size_t n = g.size();
  Vec ua(n), ub(n), w(n), back(n);
  for (int c = 0; c < 3; ++c) {
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    const Stagger fc = stagger_of(Space::face, c);
    transfer(g, stagger_of(Space::edge, a), fc, u.c(a), ua.data());
    transfer(g, stagger_of(Space::edge, b), fc, u.c(b), ub.data());
    const double* B = bf.c(c);
    for (std::size_t i = 0; i < n; ++i) w[i] = ub[i] * B[i];
    transfer_t(g, stagger_of(Space::edge, a), fc, w.data(), back.data());
    for (std::size_t i = 0; i < n; ++i) out.c(a)[i] += back[i];
    for (std::size_t i = 0; i < n; ++i) w[i] = ua[i] * B[i];
    transfer_t(g, stagger_of(Space::edge, b), fc, w.data(), back.data());
    for (std::size_t i = 0; i < n; ++i) out.c(b)[i] -= back[i];
  }
  return out;
}
}  // namespace

Field1 CrossOp::apply(const Field1& u) const {
  if (kind_ == CrossKind::standard) return cross_faces(*g_, bf_, u);
  CellVec uc = edge_to_cell(*g_, u);
  CellVec w(*g_);
  cross_cells(uc, b_, w);
  return edge_to_cell_t(*g_, w);
}

Field1 CrossOp::apply_t(const Field1& y) const {
  if (kind_ == CrossKind::standard) {
    Field1 out = cross_faces(*g_, bf_, y);  // skew by construction
    for (double& x : out.v) x = -x;
    return out;
  }
  CellVec yc = edge_to_cell(*g_, y);
  CellVec w(*g_);
  cross_cells(b_, yc, w);  // X_b^T y = b x y
  return edge_to_cell_t(*g_, w);
}

}  // namespace smhd
