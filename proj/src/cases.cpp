#include "smhd/cases.hpp"

#include <cmath>
#include <functional>

#include "smhd/errors.hpp"

namespace smhd {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt4Pi = std::sqrt(4.0 * kPi);

struct RpState {
  double rho;
  V3 u;
  double p;
  V3 B;  // internal units
};

struct RpDef {
  RpState l, r;
  double tf, xd;
};

RpDef riemann_def(int k) {
  const double s = kSqrt4Pi;
  switch (k) {
    case 0:
      return {{1.0, {0, 0, 0}, 1e3, {100, 0, 100}}, {0.125, {0, 0, 0}, 1e3, {100, 0, 100}}, 1e3, 0.0};
    case 1:
      return {{1.0, {0, 0, 0}, 1.0, {0.75, 1, 0}}, {0.125, {0, 0, 0}, 0.1, {0.75, -1, 0}}, 0.1, 0.0};
    case 2:
      return {{1.08, {1.2, 0.01, 0.5}, 0.95, {2 / s, 3.6 / s, 2 / s}},
              {0.9891, {-0.0131, 0.0269, 0.010037}, 0.97159, {2 / s, 4.0244 / s, 2.0026 / s}},
              0.2, -0.1};
    case 3:
      return {{1.7, {0, 0, 0}, 1.7, {3.899398, 3.544908, 0}},
              {0.2, {0, 0, -1.496891}, 0.2, {3.899398, 2.785898, 2.192064}}, 0.04, 0.0};
    case 4:
      return {{1.0, {0, 0, 0}, 1.0, {1.3, 1, 0}}, {0.4, {0, 0, 0}, 0.4, {1.3, -1, 0}}, 0.16, 0.0};
    case 5:
      return {{1.0, {0, 0, 0}, s, {1, 1, 0}}, {0.2, {0, 0, 0}, 0.2, {1, std::cos(3.0), std::sin(3.0)}},
              0.03, 0.0};
  }
  throw ConfigError("unknown Riemann problem");
}

int rp_index(const std::string& name) {
  if (name.size() == 3 && name.rfind("rp", 0) == 0 && name[2] >= '0' && name[2] <= '5')
    return name[2] - '0';
  return -1;
}

double par(const CaseSpec& c, const std::string& k) {
  const auto it = c.params.find(k);
  if (it == c.params.end()) throw ConfigError("case " + c.name + ": missing parameter " + k);
  return it->second;
}

// Point-wise initial data.
struct Init {
  std::function<double(const V3&)> rho, p;
  std::function<V3(const V3&)> u;
  std::function<V3(const V3&)> A;        // vector potential (optional)
  std::function<V3(const V3&)> B;        // directly sampled part (optional)
};

}  // namespace

std::vector<std::string> case_names() {
  return {"rp0", "rp1", "rp2", "rp3", "rp4", "rp5", "alfven", "vortex",
          "ot", "rotor", "vrot2d", "vrot3d", "decay"};
}

std::string canonical_case(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"ot_ideal", "ot"}, {"iso_vortex", "vortex"}, {"ot_vr", "vrot2d"}, {"ot3d_vr", "vrot3d"}};
  const auto it = alias.find(name);
  return it == alias.end() ? name : it->second;
}

CaseSpec case_defaults(const std::string& requested) {
  const std::string name = canonical_case(requested);
  CaseSpec c;
  c.name = name;
  c.phys.gamma = 5.0 / 3.0;
  const int rp = rp_index(name);
  if (rp >= 0) {
    const RpDef d = riemann_def(rp);
    c.n = {rp == 0 ? 100 : 1000, 1, 1};
    c.lo = {-0.5, 0.0, 0.0};
    c.bc = {Bc::transmissive, Bc::periodic, Bc::periodic};
    c.shift_nodes = true;
    c.tf = d.tf;
    c.params["xd"] = d.xd;
    if (rp >= 1) c.cfg.dt_growth = 1.1;
    if (rp == 3) {
      c.cfg.recon = Recon::first;
      c.cfg.c_h = 0.05;
    }
    if (rp == 4) c.cfg.c_eta = 0.01;
    return c;
  }
  if (name == "alfven") {
    c.n = {20, 20, 1};
    c.len = {2.0, 2.0, 1.0};
    c.tf = std::sqrt(5.0) / 2.0;
    c.cfg.cfl = 0.5;
    c.cfg.dt_kind = LambdaKind::b;
    c.cfg.recon = Recon::centered;
    c.cfg.theta_p = c.cfg.theta_b = c.cfg.theta_r = 0.5;
    c.params["alpha"] = 1.0;
    c.params["background"] = 1.0;
    return c;
  }
  if (name == "vortex") {
    c.n = {64, 64, 1};
    c.lo = {-5.0, -5.0, 0.0};
    c.len = {10.0, 10.0, 1.0};
    c.tf = 10.0;
    c.cfg.theta_b = 0.5;
    c.params["v0"] = 1.0;
    c.params["a0"] = 1.0;
    c.params["p0"] = 1.0;
    return c;
  }
  if (name == "ot") {
    c.n = {128, 128, 1};
    c.len = {2 * kPi, 2 * kPi, 1.0};
    c.tf = 5.0;
    return c;
  }
  if (name == "rotor") {
    c.n = {200, 200, 1};
    c.lo = {-0.5, -0.5, 0.0};
    c.bc = {Bc::transmissive, Bc::transmissive, Bc::periodic};
    c.tf = 0.25;
    c.cfg.cfl = 0.25;
    c.cfg.theta_p = 0.6;
    c.cfg.theta_b = 0.5;
    c.params["radius"] = 0.1;
    c.params["omega"] = 10.0;
    return c;
  }
  if (name == "vrot2d") {
    c.n = {128, 128, 1};
    c.len = {2 * kPi, 2 * kPi, 1.0};
    c.tf = 2.0;
    c.phys.mu = 1e-2;
    c.phys.eta = 1e-2;
    c.phys.cv = 1.0;
    c.prandtl = 1.0;
    c.cfg.theta_p = c.cfg.theta_b = c.cfg.theta_r = 0.55;
    return c;
  }
  if (name == "vrot3d") {
    c.n = {32, 32, 32};
    c.tf = 0.5;
    c.phys.mu = 6e-6;
    c.phys.eta = 1e-3;
    c.phys.cv = 1.0;
    c.prandtl = 0.72;
    c.cfg.theta_p = c.cfg.theta_b = c.cfg.theta_r = 0.65;
    return c;
  }
  if (name == "decay") {
    c.n = {128, 1, 1};
    c.tf = 1.0;
    c.phys.eta = 1e-2;
    c.cfg.theta_p = c.cfg.theta_b = c.cfg.theta_r = 0.5;
    c.params["k"] = 1.0;
    return c;
  }
  throw ConfigError("unknown case '" + name + "'");
}

GridPtr case_grid(const CaseSpec& c) {
  std::array<double, 3> lo = c.lo;
  if (c.shift_nodes)
    for (int a = 0; a < 3; ++a)
      if (c.n[a] > 1) lo[a] += 0.5 * c.len[a] / c.n[a];
  return make_grid(c.n, lo, c.len, c.bc);
}

void alfven_exact(const CaseSpec& c, const V3& x, double t, V3& v, V3& B) {
  const double nx = 1.0 / std::sqrt(5.0), ny = 2.0 / std::sqrt(5.0);
  const double alpha = par(c, "alpha");
  const double bg = par(c, "background");
  const double phi = 2.0 * kPi / ny * (nx * (x[0] - nx * t) + ny * (x[1] - ny * t));
  const double cp = std::cos(phi), sp = std::sin(phi);
  v = {-alpha * ny * cp, alpha * nx * cp, alpha * sp};
  B = {bg * nx + ny * alpha * cp, bg * ny - nx * alpha * cp, -alpha * sp};
}

namespace {

Init make_init(const CaseSpec& c) {
  Init in;
  const int rp = rp_index(c.name);
  if (rp >= 0) {
    const RpDef d = riemann_def(rp);
    const double xd = par(c, "xd");
    const double tol = 1e-9 * c.len[0];
    auto pick = [=](const V3& x, auto get) {
      if (std::abs(x[0] - xd) < tol) return 0.5 * (get(d.l) + get(d.r));
      return x[0] < xd ? get(d.l) : get(d.r);
    };
    in.rho = [=](const V3& x) { return pick(x, [](const RpState& s) { return s.rho; }); };
    in.p = [=](const V3& x) { return pick(x, [](const RpState& s) { return s.p; }); };
    in.u = [=](const V3& x) {
      V3 u;
      for (int k = 0; k < 3; ++k) u[k] = pick(x, [k](const RpState& s) { return s.u[k]; });
      return u;
    };
    in.B = [=](const V3& x) {
      V3 b;
      for (int k = 0; k < 3; ++k) b[k] = pick(x, [k](const RpState& s) { return s.B[k]; });
      return b;
    };
    return in;
  }
  if (c.name == "alfven") {
    const double nx = 1.0 / std::sqrt(5.0), ny = 2.0 / std::sqrt(5.0);
    const double alpha = par(c, "alpha"), bg = par(c, "background");
    in.rho = [](const V3&) { return 1.0; };
    in.p = [](const V3&) { return 100.0; };
    in.u = [c](const V3& x) {
      V3 v, B;
      alfven_exact(c, x, 0.0, v, B);
      return v;
    };
    in.A = [=](const V3& x) {
      const double phi = 2.0 * kPi / ny * (nx * x[0] + ny * x[1]);
      return V3{0.0, 0.0, alpha * ny / (2.0 * kPi) * std::sin(phi)};
    };
    in.B = [=](const V3& x) {
      const double phi = 2.0 * kPi / ny * (nx * x[0] + ny * x[1]);
      return V3{bg * nx, bg * ny, -alpha * std::sin(phi)};
    };
    return in;
  }
  if (c.name == "vortex") {
    const double v0 = par(c, "v0"), a0 = par(c, "a0"), p0 = par(c, "p0");
    const double av = v0 / (2 * kPi), ab = a0 / (2 * kPi);
    in.rho = [](const V3&) { return 1.0; };
    in.p = [=](const V3& x) {
      const double r2 = x[0] * x[0] + x[1] * x[1], f = std::exp(1.0 - r2);
      return p0 + 0.5 * ab * ab * (1.0 - r2) * f - 0.5 * av * av * f;
    };
    in.u = [=](const V3& x) {
      const double e = av * std::exp(0.5 * (1.0 - x[0] * x[0] - x[1] * x[1]));
      return V3{-x[1] * e, x[0] * e, 0.0};
    };
    in.A = [=](const V3& x) {
      return V3{0.0, 0.0, ab * std::exp(0.5 * (1.0 - x[0] * x[0] - x[1] * x[1]))};
    };
    return in;
  }
  if (c.name == "ot" || c.name == "vrot2d") {
    const bool vr = c.name == "vrot2d";
    const double g = c.phys.gamma;
    const double bs = vr ? 1.0 / kSqrt4Pi : 1.0;
    in.rho = [=](const V3&) { return vr ? 1.0 : g * g; };
    in.p = [=](const V3& x) {
      if (!vr) return g;
      return 15.0 / 4.0 + 0.25 * std::cos(4 * x[0]) + 0.8 * std::cos(2 * x[0]) * std::cos(x[1]) -
             std::cos(x[0]) * std::cos(x[1]) + 0.25 * std::cos(2 * x[1]);
    };
    in.u = [](const V3& x) { return V3{-std::sin(x[1]), std::sin(x[0]), 0.0}; };
    in.A = [=](const V3& x) {
      return V3{0.0, 0.0, bs * (std::cos(x[1]) + 0.5 * std::cos(2 * x[0]))};
    };
    return in;
  }
  if (c.name == "rotor") {
    const double R = par(c, "radius"), om = par(c, "omega");
    auto taper = [=](const V3& x) {
      const double r = std::hypot(x[0], x[1]);
      if (r <= R) return 1.0;
      if (r >= 1.05 * R) return 0.0;
      return (1.05 * R - r) / (0.05 * R);
    };
    in.rho = [=](const V3& x) { return 1.0 + 9.0 * taper(x); };
    in.p = [](const V3&) { return 1.0; };
    in.u = [=](const V3& x) {
      const double f = taper(x) * om;
      return V3{-f * x[1], f * x[0], 0.0};
    };
    in.B = [](const V3&) { return V3{2.5, 0.0, 0.0}; };
    return in;
  }
  if (c.name == "vrot3d") {
    const double tp = 2 * kPi, fp = 4 * kPi;
    in.rho = [](const V3&) { return 25.0 / (36.0 * kPi); };
    in.p = [](const V3&) { return 5.0 / (12.0 * kPi); };
    in.u = [=](const V3& x) {
      return V3{-std::sin(tp * x[2]), std::sin(tp * x[0]), std::sin(tp * x[1])};
    };
    in.A = [=](const V3& x) {
      return V3{std::cos(fp * x[1]) / fp, -std::cos(tp * x[2]) / tp, std::cos(fp * x[0]) / fp};
    };
    return in;
  }
  if (c.name == "decay") {
    const double k = 2 * kPi * par(c, "k");
    in.rho = [](const V3&) { return 1.0; };
    in.p = [](const V3&) { return 1.0; };
    in.u = [](const V3&) { return V3{0.0, 0.0, 0.0}; };
    in.A = [=](const V3& x) { return V3{0.0, 0.0, std::cos(k * x[0]) / k}; };
    return in;
  }
  throw ConfigError("unknown case '" + c.name + "'");
}

}  // namespace

MhdState init_case(const CaseSpec& c) {
  MhdState s;
  s.grid = case_grid(c);
  s.phys = c.phys;
  if (c.prandtl > 0.0) s.phys.kappa = c.phys.mu * c.phys.gamma * c.phys.cv / c.prandtl;
  const Grid& g = *s.grid;
  const Init in = make_init(c);

  s.rho = Field0(g);
  s.p = Field0(g);
  s.u = Field1(g);
  s.B = Field2(g);
  Field1 A(g);
  for (int k = 0; k < g.n(2); ++k)
    for (int j = 0; j < g.n(1); ++j)
      for (int i = 0; i < g.n(0); ++i) {
        const std::size_t id = g.index(i, j, k);
        const V3 xn = g.location(Space::node, 0, i, j, k);
        s.rho.v[id] = in.rho(xn);
        s.p.v[id] = in.p(xn);
        for (int cc = 0; cc < 3; ++cc) {
          const V3 xe = g.location(Space::edge, cc, i, j, k);
          s.u.c(cc)[id] = in.u(xe)[cc];
          if (in.A) A.c(cc)[id] = in.A(xe)[cc];
          if (in.B) s.B.c(cc)[id] = in.B(g.location(Space::face, cc, i, j, k))[cc];
        }
      }
  if (in.A) {
    const Field2 cb = curl(g, A);
    for (std::size_t i = 0; i < s.B.size(); ++i) s.B.v[i] += cb.v[i];
  }
  init_energy(s);
  check_admissible(s, "init_case");
  return s;
}

AlfvenErrors alfven_errors(const CaseSpec& c, const MhdState& s) {
  const Grid& g = s.g();
  const double vol = g.vol();
  AlfvenErrors e;
  auto acc = [&](Norms& nrm, double d) {
    nrm.l1 += std::abs(d) * vol;
    nrm.l2 += d * d * vol;
    nrm.linf = std::max(nrm.linf, std::abs(d));
  };
  for (int k = 0; k < g.n(2); ++k)
    for (int j = 0; j < g.n(1); ++j)
      for (int i = 0; i < g.n(0); ++i) {
        const std::size_t id = g.index(i, j, k);
        V3 v, B;
        alfven_exact(c, g.location(Space::edge, 0, i, j, k), s.t, v, B);
        acc(e.vx, s.u.c(0)[id] - v[0]);
        alfven_exact(c, g.location(Space::edge, 1, i, j, k), s.t, v, B);
        acc(e.vy, s.u.c(1)[id] - v[1]);
        alfven_exact(c, g.location(Space::face, 0, i, j, k), s.t, v, B);
        acc(e.bx, s.B.c(0)[id] - B[0]);
        alfven_exact(c, g.location(Space::face, 1, i, j, k), s.t, v, B);
        acc(e.by, s.B.c(1)[id] - B[1]);
      }
  for (Norms* n : {&e.vx, &e.vy, &e.bx, &e.by}) n->l2 = std::sqrt(n->l2);
  return e;
}

}  // namespace smhd
