#include "smhd/state.hpp"

#include <cmath>
#include <string>

#include "smhd/errors.hpp"

namespace smhd {

Field1 edge_momentum(const MhdState& s) {
  Field1 m = rho_bar(s.g(), s.rho);
  for (std::size_t i = 0; i < m.size(); ++i) m.v[i] *= s.u.v[i];
  return m;
}

Vec node_kinetic(const Grid& g, const Field1& u, const Field1& m) {
  const std::size_t n = g.size();
  Field1 um(g);
  for (std::size_t i = 0; i < um.size(); ++i) um.v[i] = u.v[i] * m.v[i];
  Vec nodes;
  edge_to_node(g, um, nodes);
  Vec ke(n);
  for (std::size_t i = 0; i < n; ++i) ke[i] = 0.5 * (nodes[i] + nodes[n + i] + nodes[2 * n + i]);
  return ke;
}

Vec node_magnetic(const Grid& g, const Field2& B) {
  const std::size_t n = g.size();
  Field2 b2(g);
  for (std::size_t i = 0; i < b2.size(); ++i) b2.v[i] = B.v[i] * B.v[i];
  Vec nodes;
  face_to_node(g, b2, nodes);
  Vec me(n);
  for (std::size_t i = 0; i < n; ++i) me[i] = 0.5 * (nodes[i] + nodes[n + i] + nodes[2 * n + i]);
  return me;
}

Vec node_momentum(const Grid& g, const Field1& m) {
  Vec out;
  edge_to_node(g, m, out);
  return out;
}

void init_energy(MhdState& s) {
  const Grid& g = s.g();
  const Vec ke = node_kinetic(g, s.u, edge_momentum(s));
  const Vec me = node_magnetic(g, s.B);
  s.E = Field0(g);
  const double gm1 = s.phys.gamma - 1.0;
  for (std::size_t i = 0; i < g.size(); ++i) s.E.v[i] = s.p.v[i] / gm1 + ke[i] + me[i];
}

int refresh_pressure(MhdState& s) {
  const Grid& g = s.g();
  const Vec ke = node_kinetic(g, s.u, edge_momentum(s));
  const Vec me = node_magnetic(g, s.B);
  const double gm1 = s.phys.gamma - 1.0;
  int neg = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    s.p.v[i] = gm1 * (s.E.v[i] - ke[i] - me[i]);
    if (s.p.v[i] < 0.0) ++neg;
  }
  return neg;
}

void check_admissible(const MhdState& s, const char* where) {
  const Grid& g = s.g();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(s.rho.v[i] > 0.0) || !std::isfinite(s.rho.v[i])) {
      const auto c = g.ijk(i);
      throw StateError(std::string(where) + ": inadmissible density " + std::to_string(s.rho.v[i]) +
                       " at node (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                       std::to_string(c[2]) + ")");
    }
    if (!std::isfinite(s.E.v[i]) || !std::isfinite(s.p.v[i]))
      throw StateError(std::string(where) + ": non-finite energy at node " + std::to_string(i));
  }
  for (double x : s.u.v)
    if (!std::isfinite(x)) throw StateError(std::string(where) + ": non-finite velocity");
  for (double x : s.B.v)
    if (!std::isfinite(x)) throw StateError(std::string(where) + ": non-finite magnetic field");
}

Vec dual_div(const Grid& g, const double* fx, const double* fy, const double* fz) {
  const std::size_t n = g.size();
  Vec out(n, 0.0);
  const double* f[3] = {fx, fy, fz};
  for (int a = 0; a < 3; ++a) {
    if (!g.active(a) || f[a] == nullptr) continue;
    const double inv = 1.0 / g.d(a);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = g.minus(a, i);
      if (m != i) out[i] += (f[a][i] - f[a][m]) * inv;
    }
  }
  return out;
}

void edge_at_dual_face(const Grid& g, const Field1& u, int a, Vec& out3) {
  const std::size_t n = g.size();
  out3.assign(3 * n, 0.0);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::edge, c), stagger_of(Space::edge, a), u.c(c), out3.data() + c * n);
}

void face_at_dual_face(const Grid& g, const Field2& b, int a, Vec& out3) {
  const std::size_t n = g.size();
  out3.assign(3 * n, 0.0);
  for (int c = 0; c < 3; ++c)
    transfer(g, stagger_of(Space::face, c), stagger_of(Space::edge, a), b.c(c), out3.data() + c * n);
}

Totals totals(const MhdState& s) {
  const Grid& g = s.g();
  const double vol = g.vol();
  Totals t;
  const Field1 m = edge_momentum(s);
  for (std::size_t i = 0; i < g.size(); ++i) {
    t.mass += s.rho.v[i] * vol;
    t.energy += s.E.v[i] * vol;
  }
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < g.size(); ++i) t.mom[c] += m.c(c)[i] * vol;
  for (double b : s.B.v) t.e_mag += 0.5 * b * b * vol;
  for (std::size_t i = 0; i < m.size(); ++i) t.e_kin += 0.5 * m.v[i] * s.u.v[i] * vol;
  return t;
}

DivNorms div_norms(const Grid& g, const Field2& B) {
  const Field3 d = div(g, B);
  DivNorms r;
  double s2 = 0.0;
  for (double x : d.v) {
    s2 += x * x;
    r.linf = std::max(r.linf, std::abs(x));
  }
  r.l2 = std::sqrt(s2 * g.vol());
  return r;
}

}  // namespace smhd
