#include "smhd/fv.hpp"

#include <algorithm>
#include <cmath>

#include "smhd/errors.hpp"

namespace smhd {

FvVec advective_flux(const FvVec& w, int a) {
  const double rho = w[0];
  const double ua = w[1 + a] / rho;
  const double ke = 0.5 * (w[1] * w[1] + w[2] * w[2] + w[3] * w[3]) / rho;
  return {w[1 + a], w[1] * ua, w[2] * ua, w[3] * ua, ke * ua};
}

FvVec rusanov_flux(const FvVec& wl, const FvVec& wr, double s, int a) {
  const FvVec fl = advective_flux(wl, a), fr = advective_flux(wr, a);
  FvVec f{};
  for (int q = 0; q < 5; ++q) f[q] = 0.5 * (fl[q] + fr[q]) - 0.5 * s * (wr[q] - wl[q]);
  return f;
}

FvVec upwind_flux(const FvVec& wl, const FvVec& wr, int a) {
  const FvVec fl = advective_flux(wl, a), fr = advective_flux(wr, a);
  const double ubar = 0.5 * (wl[1 + a] / wl[0] + wr[1 + a] / wr[0]);
  const double omega = ubar / std::sqrt(1e-14 + ubar * ubar);
  FvVec f{};
  for (int q = 0; q < 5; ++q) f[q] = 0.5 * (fl[q] + fr[q]) - 0.5 * omega * (fr[q] - fl[q]);
  return f;
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

namespace {

double face_speed(LambdaKind kind, const Physics& ph, const FvVec& w, const V3& B, int a) {
  const double rho = w[0];
  const V3 u{w[1] / rho, w[2] / rho, w[3] / rho};
  if (kind == LambdaKind::v) return std::abs(u[a]);
  const double ke = 0.5 * (w[1] * u[0] + w[2] * u[1] + w[3] * u[2]);
  const double p = std::max((ph.gamma - 1.0) * (w[4] - ke), 0.0);
  return lambda(kind, ph, rho, p, u, B, a);
}

}  // namespace

FvStats fv_step(MhdState& s, double dt, const SolverConfig& cfg) {
  const Grid& g = s.g();
  const Physics& ph = s.phys;
  const std::size_t n = g.size();
  FvStats stats;

  Field1 m_e = edge_momentum(s);
  const Vec m_d = node_momentum(g, m_e);
  const Vec me = node_magnetic(g, s.B);

  // q[0..4][node]
  std::array<Vec, 5> q;
  q[0] = s.rho.v;
  for (int c = 0; c < 3; ++c) q[1 + c].assign(m_d.begin() + c * n, m_d.begin() + (c + 1) * n);
  q[4].resize(n);
  for (std::size_t i = 0; i < n; ++i) q[4][i] = s.E.v[i] - me[i];

  auto load = [&](std::size_t i) {
    return FvVec{q[0][i], q[1][i], q[2][i], q[3][i], q[4][i]};
  };

  Vec bnode;
  const bool need_b = cfg.flux_speed == LambdaKind::b || cfg.flux_speed == LambdaKind::mhd;
  if (need_b) face_to_node(g, s.B, bnode);
  auto bn = [&](std::size_t i) {
    return need_b ? V3{bnode[i], bnode[n + i], bnode[2 * n + i]} : V3{0.0, 0.0, 0.0};
  };

  const bool slopes = cfg.recon == Recon::muscl || cfg.recon == Recon::centered;
  std::array<std::array<Vec, 5>, 3> sl;
  Vec dqdt[5];
  if (slopes) {
    for (int qq = 0; qq < 5; ++qq) dqdt[qq].assign(n, 0.0);
    for (int a = 0; a < 3; ++a) {
      if (!g.active(a)) continue;
      for (int qq = 0; qq < 5; ++qq) {
        sl[a][qq].resize(n);
        const Vec& f = q[qq];
        for (std::size_t i = 0; i < n; ++i) {
          const double dl = f[i] - f[g.minus(a, i)], dr = f[g.plus(a, i)] - f[i];
          sl[a][qq][i] = cfg.recon == Recon::muscl ? minmod(dl, dr) : 0.5 * (dl + dr);
        }
      }
      // Hancock predictor: half-step time derivative from the cell's own
      // boundary extrapolations
      const double inv = 1.0 / g.d(a);
      for (std::size_t i = 0; i < n; ++i) {
        FvVec lo = load(i), hi = load(i);
        for (int qq = 0; qq < 5; ++qq) {
          lo[qq] -= 0.5 * sl[a][qq][i];
          hi[qq] += 0.5 * sl[a][qq][i];
        }
        if (!(lo[0] > 0.0) || !(hi[0] > 0.0)) continue;
        const FvVec fl = advective_flux(lo, a), fh = advective_flux(hi, a);
        for (int qq = 0; qq < 5; ++qq) dqdt[qq][i] -= (fh[qq] - fl[qq]) * inv;
      }
    }
  }

  // FE values at dual faces for the FEEC reconstruction
  std::array<Vec, 3> mface;
  if (cfg.recon == Recon::feec)
    for (int a = 0; a < 3; ++a)
      if (g.active(a)) edge_at_dual_face(g, m_e, a, mface[a]);

  // Diffusive ingredients
  const bool diffusive = ph.mu > 0.0 || ph.kappa > 0.0;
  Vec un, T;
  if (diffusive) {
    un.resize(3 * n);
    T.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int c = 0; c < 3; ++c) un[c * n + i] = q[1 + c][i] / q[0][i];
      T[i] = s.p.v[i] / ((ph.gamma - 1.0) * ph.cv * q[0][i]);
    }
  }
  auto cdiff = [&](const double* f, int b, std::size_t i) {
    // centred derivative along b at node i
    const std::size_t p = g.plus(b, i), m = g.minus(b, i);
    const double span = (p == i || m == i) ? g.d(b) : 2.0 * g.d(b);
    return (p == m) ? 0.0 : (f[p] - f[m]) / span;
  };

  std::array<std::array<Vec, 5>, 3> F;
  for (int a = 0; a < 3; ++a) {
    if (!g.active(a)) continue;
    for (int qq = 0; qq < 5; ++qq) F[a][qq].assign(n, 0.0);
    const double hdt = 0.5 * dt;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t ip = g.plus(a, i);
      FvVec wl = load(i), wr = load(ip);
      if (cfg.recon == Recon::feec) {
        const double rf = 0.5 * (q[0][i] + q[0][ip]);
        const double ef = 0.5 * (q[4][i] + q[4][ip]);
        wl = {rf, mface[a][i], mface[a][n + i], mface[a][2 * n + i], ef};
        wr = wl;
      } else if (slopes) {
        FvVec l = wl, r = wr;
        for (int qq = 0; qq < 5; ++qq) {
          l[qq] += 0.5 * sl[a][qq][i] + hdt * dqdt[qq][i];
          r[qq] += -0.5 * sl[a][qq][ip] + hdt * dqdt[qq][ip];
        }
        if (l[0] > 0.0 && r[0] > 0.0) {
          wl = l;
          wr = r;
        } else {
          ++stats.fallback_faces;
        }
      }
      FvVec f;
      if (cfg.flux == FluxKind::upwind) {
        f = upwind_flux(wl, wr, a);
      } else {
        const double sp = std::max(face_speed(cfg.flux_speed, ph, wl, bn(i), a),
                                   face_speed(cfg.flux_speed, ph, wr, bn(ip), a));
        f = rusanov_flux(wl, wr, sp, a);
      }
      if (diffusive && ip != i) {
        // stress and heat flux at the face between i and ip
        double grad[3][3];  // grad[b][c] = d_b u_c
        for (int c = 0; c < 3; ++c) {
          const double* uc = un.data() + c * n;
          for (int b = 0; b < 3; ++b) {
            if (!g.active(b))
              grad[b][c] = 0.0;
            else if (b == a)
              grad[b][c] = (uc[ip] - uc[i]) / g.d(a);
            else
              grad[b][c] = 0.5 * (cdiff(uc, b, i) + cdiff(uc, b, ip));
          }
        }
        const double divu = grad[0][0] + grad[1][1] + grad[2][2];
        double work = 0.0;
        for (int c = 0; c < 3; ++c) {
          double tau = ph.mu * (grad[a][c] + grad[c][a] - (c == a ? 2.0 / 3.0 * divu : 0.0));
          f[1 + c] -= tau;
          work += 0.5 * (un[c * n + i] + un[c * n + ip]) * tau;
        }
        f[4] -= work + ph.kappa * (T[ip] - T[i]) / g.d(a);
      }
      for (int qq = 0; qq < 5; ++qq) F[a][qq][i] = f[qq];
    }
  }

  auto fptr = [&](int a, int qq) -> const double* {
    return g.active(a) ? F[a][qq].data() : nullptr;
  };
  std::array<Vec, 5> dq;
  for (int qq = 0; qq < 5; ++qq) {
    dq[qq] = dual_div(g, fptr(0, qq), fptr(1, qq), fptr(2, qq));
    for (double& x : dq[qq]) x *= -dt;
  }

  for (std::size_t i = 0; i < n; ++i) {
    s.rho.v[i] += dq[0][i];
    s.E.v[i] += dq[4][i];
  }
  check_admissible(s, "fv_step");

  Vec dm(3 * n);
  for (int c = 0; c < 3; ++c)
    std::copy(dq[1 + c].begin(), dq[1 + c].end(), dm.begin() + c * n);
  const Field1 dme = node_to_edge(g, dm);
  const Field1 rb = rho_bar(g, s.rho);
  for (std::size_t i = 0; i < s.u.size(); ++i) s.u.v[i] = (m_e.v[i] + dme.v[i]) / rb.v[i];
  refresh_pressure(s);
  return stats;
}

}  // namespace smhd
