#pragma once

#include "smhd/field.hpp"
#include "smhd/grid.hpp"

namespace smhd {

// Single-axis primitives on scalar arrays of grid.size() values.
// avg_plus: half -> whole position, avg_minus: whole -> half position.
void avg_plus(const Grid& g, int a, const double* f, double* out);
void avg_plus_t(const Grid& g, int a, const double* f, double* out);
void avg_minus(const Grid& g, int a, const double* f, double* out);
void avg_minus_t(const Grid& g, int a, const double* f, double* out);
/// (f[i+1] - f[i]) / d, zero across a transmissive end.
void diff_plus(const Grid& g, int a, const double* f, double* out);
void diff_plus_t(const Grid& g, int a, const double* f, double* out);
/// Dual difference (f[i-1] - f[i]) / d with a zero row at a transmissive
/// start. Equals diff_plus_t on periodic axes; unlike it, a uniform field
/// gives zero at both ends. Used for explicit dual terms.
void diff_dual(const Grid& g, int a, const double* f, double* out);

/// Move a scalar array between staggered positions by axis averages.
void transfer(const Grid& g, Stagger from, Stagger to, const double* f, double* out);
void transfer_t(const Grid& g, Stagger from, Stagger to, const double* f, double* out);

// Strong derivatives of the complex.
Field1 grad(const Grid& g, const Field0& p);
Field2 curl(const Grid& g, const Field1& u);
Field3 div(const Grid& g, const Field2& b);

// Exact transposes (weak derivatives up to sign and lumped masses).
Field0 grad_T(const Grid& g, const Field1& y);
Field1 curl_T(const Grid& g, const Field2& y);
Field2 div_T(const Grid& g, const Field3& y);
/// curl_T built from diff_dual (ghost-closed at transmissive ends).
Field1 curl_dual(const Grid& g, const Field2& y);

/// Lumped masses: M_k = vol * I for every space.
template <Space S>
Field<S> mass(const Grid& g, const Field<S>& f) {
  Field<S> out = f;
  const double w = g.vol();
  for (double& x : out.v) x *= w;
  return out;
}

/// Face to edge projection (mean of the 8 surrounding same-component faces).
Field1 project_p1(const Grid& g, const Field2& b);
/// Edge to cell map (mean of the 4 parallel cell edges) and its transpose.
CellVec edge_to_cell(const Grid& g, const Field1& u);
Field1 edge_to_cell_t(const Grid& g, const CellVec& c);
/// Face to cell map (mean of the 2 opposite faces).
CellVec face_to_cell(const Grid& g, const Field2& b);

/// Nodal (dual cell) values of edge / face fields, componentwise.
void edge_to_node(const Grid& g, const Field1& u, Vec& out3);
void face_to_node(const Grid& g, const Field2& b, Vec& out3);
/// Edge values from nodal increments (A_e) and its dual (A_n).
Field1 node_to_edge(const Grid& g, const Vec& node3);
/// Density averaged to each edge component (rho bar).
Field1 rho_bar(const Grid& g, const Field0& rho);

enum class CrossKind { standard, orthogonal };

/// Cross-product operator P_B, linear in u and skew (P^T = -P).
/// standard: each term u_b B_c is formed on the faces carrying B_c.
/// orthogonal: P_B u = Pi^T((Pi u) x b), b the cell value of P1 B, so that
/// <P1 B, P_B u> vanishes.
class CrossOp {
 public:
  CrossOp(const Grid& g, const Field2& b, CrossKind kind);
  Field1 apply(const Field1& u) const;
  Field1 apply_t(const Field1& y) const;

 private:
  const Grid* g_;
  CrossKind kind_;
  CellVec b_;
  Field2 bf_;
};

}  // namespace smhd
