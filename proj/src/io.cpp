#include "smhd/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "smhd/errors.hpp"

namespace smhd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("setting '" + key + "': expected a number, got '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::floor(x)) throw ConfigError("setting '" + key + "': expected an integer");
  return static_cast<long>(x);
}

LambdaKind to_lambda(const std::string& key, const std::string& v) {
  if (v == "v") return LambdaKind::v;
  if (v == "p") return LambdaKind::p;
  if (v == "b") return LambdaKind::b;
  if (v == "mhd") return LambdaKind::mhd;
  throw ConfigError("setting '" + key + "': expected v|p|b|mhd, got '" + v + "'");
}

const char* lambda_name(LambdaKind k) {
  switch (k) {
    case LambdaKind::v: return "v";
    case LambdaKind::p: return "p";
    case LambdaKind::b: return "b";
    case LambdaKind::mhd: return "mhd";
  }
  return "v";
}

const char* recon_name(Recon r) {
  switch (r) {
    case Recon::first: return "first";
    case Recon::muscl: return "muscl";
    case Recon::centered: return "centered";
    case Recon::feec: return "feec";
  }
  return "muscl";
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

Settings parse_config(std::istream& in, const std::string& source) {
  Settings out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k.empty() || v.empty())
      throw ConfigError(source + ":" + std::to_string(lineno) + ": empty key or value");
    out.emplace_back(k, v);
  }
  return out;
}

Settings parse_config_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw ConfigError("cannot open config file " + p.string());
  return parse_config(f, p.string());
}

void apply_setting(CaseSpec& c, RunOptions& o, const std::string& key, const std::string& v) {
  SolverConfig& s = c.cfg;
  if (key == "nx") c.n[0] = int(to_long(key, v));
  else if (key == "ny") c.n[1] = int(to_long(key, v));
  else if (key == "nz") c.n[2] = int(to_long(key, v));
  else if (key == "tf") c.tf = to_double(key, v);
  else if (key == "cfl") s.cfl = to_double(key, v);
  else if (key == "theta") s.theta_p = s.theta_b = s.theta_r = to_double(key, v);
  else if (key == "theta_p") s.theta_p = to_double(key, v);
  else if (key == "theta_b") s.theta_b = to_double(key, v);
  else if (key == "theta_r") s.theta_r = to_double(key, v);
  else if (key == "dt_kind") s.dt_kind = to_lambda(key, v);
  else if (key == "flux_speed") s.flux_speed = to_lambda(key, v);
  else if (key == "eta_kind") s.eta_kind = to_lambda(key, v);
  else if (key == "flux") {
    if (v == "rusanov") s.flux = FluxKind::rusanov;
    else if (v == "upwind") s.flux = FluxKind::upwind;
    else throw ConfigError("setting 'flux': expected rusanov|upwind");
  } else if (key == "recon") {
    if (v == "first") s.recon = Recon::first;
    else if (v == "muscl") s.recon = Recon::muscl;
    else if (v == "centered") s.recon = Recon::centered;
    else if (v == "feec") s.recon = Recon::feec;
    else throw ConfigError("setting 'recon': expected first|muscl|centered|feec");
  } else if (key == "cross") {
    if (v == "standard") s.cross = CrossKind::standard;
    else if (v == "orthogonal") s.cross = CrossKind::orthogonal;
    else throw ConfigError("setting 'cross': expected standard|orthogonal");
  } else if (key == "outer_r") s.outer_r = int(to_long(key, v));
  else if (key == "s_p") s.s_p = int(to_long(key, v));
  else if (key == "s_b") s.s_b = int(to_long(key, v));
  else if (key == "picard_tol") s.picard_tol = to_double(key, v);
  else if (key == "picard_cap") s.picard_cap = int(to_long(key, v));
  else if (key == "c_h") s.c_h = to_double(key, v);
  else if (key == "c_eta") s.c_eta = to_double(key, v);
  else if (key == "dt_growth") s.dt_growth = to_double(key, v);
  else if (key == "fixed_dt") s.fixed_dt = to_double(key, v);
  else if (key == "cg_tol") s.cg.rel_tol = to_double(key, v);
  else if (key == "cg_max_iter") s.cg.max_iter = int(to_long(key, v));
  else if (key == "gamma") c.phys.gamma = to_double(key, v);
  else if (key == "cv") c.phys.cv = to_double(key, v);
  else if (key == "mu") c.phys.mu = to_double(key, v);
  else if (key == "kappa") c.phys.kappa = to_double(key, v);
  else if (key == "eta") c.phys.eta = to_double(key, v);
  else if (key == "prandtl") c.prandtl = to_double(key, v);
  else if (key == "output_dir") o.output_dir = v;
  else if (key == "output_every") o.output_every = to_long(key, v);
  else if (key == "max_steps") o.max_steps = to_long(key, v);
  else if (key == "cut") o.cut = v;
  else if (key == "helicity_every") o.helicity_every = to_long(key, v);
  else if (c.params.count(key)) c.params[key] = to_double(key, v);
  else throw ConfigError("unknown setting '" + key + "' for case " + c.name);

  if (key == "theta" || key == "theta_p" || key == "theta_b" || key == "theta_r") {
    for (double t : {s.theta_p, s.theta_b, s.theta_r})
      if (t < 0.0 || t > 1.0) throw ConfigError("implicit weights must lie in [0, 1]");
  }
  if (key == "cfl" && !(s.cfl > 0.0)) throw ConfigError("cfl must be positive");
  if ((key == "nx" || key == "ny" || key == "nz") && to_long(key, v) < 1)
    throw ConfigError("cell counts must be positive");
}

CaseSpec resolve(const std::string& case_name, const std::vector<Settings>& sources, RunOptions& o) {
  std::string name = case_name;
  for (const Settings& src : sources)
    for (const auto& [k, v] : src)
      if (k == "case") name = v;
  if (name.empty()) throw ConfigError("no case selected");
  CaseSpec c = case_defaults(name);
  for (const Settings& src : sources)
    for (const auto& [k, v] : src)
      if (k != "case") apply_setting(c, o, k, v);
  return c;
}

Settings describe(const CaseSpec& c, const RunOptions& o) {
  const SolverConfig& s = c.cfg;
  Settings d = {
      {"case", c.name},
      {"nx", std::to_string(c.n[0])},
      {"ny", std::to_string(c.n[1])},
      {"nz", std::to_string(c.n[2])},
      {"tf", num(c.tf)},
      {"cfl", num(s.cfl)},
      {"theta_p", num(s.theta_p)},
      {"theta_b", num(s.theta_b)},
      {"theta_r", num(s.theta_r)},
      {"dt_kind", lambda_name(s.dt_kind)},
      {"flux_speed", lambda_name(s.flux_speed)},
      {"eta_kind", lambda_name(s.eta_kind)},
      {"flux", s.flux == FluxKind::upwind ? "upwind" : "rusanov"},
      {"recon", recon_name(s.recon)},
      {"cross", s.cross == CrossKind::orthogonal ? "orthogonal" : "standard"},
      {"outer_r", std::to_string(s.outer_r)},
      {"s_p", std::to_string(s.s_p)},
      {"s_b", std::to_string(s.s_b)},
      {"picard_tol", num(s.picard_tol)},
      {"picard_cap", std::to_string(s.picard_cap)},
      {"c_h", num(s.c_h)},
      {"c_eta", num(s.c_eta)},
      {"dt_growth", num(s.dt_growth)},
      {"fixed_dt", num(s.fixed_dt)},
      {"cg_tol", num(s.cg.rel_tol)},
      {"cg_max_iter", std::to_string(s.cg.max_iter)},
      {"gamma", num(c.phys.gamma)},
      {"cv", num(c.phys.cv)},
      {"mu", num(c.phys.mu)},
      {"kappa", num(c.phys.kappa)},
      {"eta", num(c.phys.eta)},
      {"prandtl", num(c.prandtl)},
      {"output_dir", o.output_dir},
      {"output_every", std::to_string(o.output_every)},
      {"max_steps", std::to_string(o.max_steps)},
      {"cut", o.cut},
      {"helicity_every", std::to_string(o.helicity_every)},
  };
  for (const auto& [k, v] : c.params) d.emplace_back(k, num(v));
  return d;
}

std::filesystem::path output_root() {
  const char* env = std::getenv("SMHD_OUTPUT_ROOT");
  return env && *env ? std::filesystem::path(env) : std::filesystem::current_path();
}

void write_settings(const std::filesystem::path& p, const Settings& s) {
  std::ofstream f(p);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << "# " << kVersion << "\n";
  for (const auto& [k, v] : s) f << k << " = " << v << "\n";
}

void write_vtk(const std::filesystem::path& p, const MhdState& s) {
  const Grid& g = s.g();
  const std::size_t n = g.size();
  std::ofstream f(p);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << std::setprecision(10);
  f << "# vtk DataFile Version 3.0\n" << kVersion << " t=" << s.t << "\nASCII\nDATASET STRUCTURED_POINTS\n";
  f << "DIMENSIONS " << g.n(0) + 1 << " " << g.n(1) + 1 << " " << g.n(2) + 1 << "\n";
  f << "ORIGIN " << g.origin(0) - 0.5 * g.d(0) << " " << g.origin(1) - 0.5 * g.d(1) << " "
    << g.origin(2) - 0.5 * g.d(2) << "\n";
  f << "SPACING " << g.d(0) << " " << g.d(1) << " " << g.d(2) << "\n";
  f << "CELL_DATA " << n << "\n";
  auto scalar = [&](const char* name, auto value) {
    f << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t i = 0; i < n; ++i) f << value(i) << "\n";
  };
  Vec un, bn;
  edge_to_node(g, s.u, un);
  face_to_node(g, s.B, bn);
  const Field3 d = div(g, s.B);
  scalar("rho", [&](std::size_t i) { return s.rho.v[i]; });
  scalar("p", [&](std::size_t i) { return s.p.v[i]; });
  scalar("umag", [&](std::size_t i) {
    return std::sqrt(un[i] * un[i] + un[n + i] * un[n + i] + un[2 * n + i] * un[2 * n + i]);
  });
  scalar("Bmag", [&](std::size_t i) {
    return std::sqrt(bn[i] * bn[i] + bn[n + i] * bn[n + i] + bn[2 * n + i] * bn[2 * n + i]);
  });
  scalar("divB", [&](std::size_t i) { return d.v[i]; });
  scalar("log10_divB", [&](std::size_t i) { return std::log10(std::max(std::abs(d.v[i]), 1e-32)); });
  const char* un_names[3] = {"u_edge_x", "u_edge_y", "u_edge_z"};
  const char* bn_names[3] = {"B_face_x", "B_face_y", "B_face_z"};
  for (int c = 0; c < 3; ++c) scalar(un_names[c], [&](std::size_t i) { return s.u.c(c)[i]; });
  for (int c = 0; c < 3; ++c) scalar(bn_names[c], [&](std::size_t i) { return s.B.c(c)[i]; });
}

void write_cut(const std::filesystem::path& p, const MhdState& s, const std::string& cut) {
  const Grid& g = s.g();
  const std::size_t n = g.size();
  std::ofstream f(p);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << std::setprecision(17);
  f << "s,x,y,z,rho,ux,uy,uz,p,Bx,By,Bz\n";
  Vec un, bn;
  edge_to_node(g, s.u, un);
  face_to_node(g, s.B, bn);
  auto row = [&](double sv, std::size_t id) {
    const auto ijk = g.ijk(id);
    const V3 x = g.location(Space::node, 0, ijk[0], ijk[1], ijk[2]);
    f << sv << "," << x[0] << "," << x[1] << "," << x[2] << "," << s.rho.v[id] << "," << un[id] << ","
      << un[n + id] << "," << un[2 * n + id] << "," << s.p.v[id] << "," << bn[id] << ","
      << bn[n + id] << "," << bn[2 * n + id] << "\n";
  };
  const int mid[3] = {g.n(0) / 2, g.n(1) / 2, g.n(2) / 2};
  if (cut == "x" || cut == "y" || cut == "z") {
    const int a = cut[0] - 'x';
    for (int i = 0; i < g.n(a); ++i) {
      int c[3] = {mid[0], mid[1], mid[2]};
      c[a] = i;
      const std::size_t id = g.index(c[0], c[1], c[2]);
      row(g.location(Space::node, 0, c[0], c[1], c[2])[a], id);
    }
    return;
  }
  // line y - yc = tan(alpha) (x - xc) through the domain centre, nearest node
  double alpha = 0.0;
  try {
    alpha = std::stod(cut);
  } catch (const std::exception&) {
    throw ConfigError("cut must be x, y, z or an angle in radians");
  }
  const double xc = g.origin(0) + 0.5 * (g.n(0) - 2) * g.d(0) + 0.5 * g.d(0);
  const double yc = g.origin(1) + 0.5 * (g.n(1) - 2) * g.d(1) + 0.5 * g.d(1);
  const double h = std::min(g.d(0), g.d(1));
  const double half = 0.5 * std::hypot(g.n(0) * g.d(0), g.n(1) * g.d(1));
  for (double sv = -half; sv <= half; sv += h) {
    const double x = xc + sv * std::cos(alpha), y = yc + sv * std::sin(alpha);
    const int i = int(std::lround((x - g.origin(0)) / g.d(0) + 0.5));
    const int j = int(std::lround((y - g.origin(1)) / g.d(1) + 0.5));
    if (i < 0 || j < 0 || i >= g.n(0) || j >= g.n(1)) continue;
    row(sv, g.index(i, j, mid[2]));
  }
}

void write_diagnostics_header(std::ostream& os) {
  os << "t,dt,eff_courant,mass,mom_x,mom_y,mom_z,E_hydro,E_mag,helicity,divB_L2,divB_Linf,"
        "cg_iters_b,cg_iters_p,picard_r\n";
}

void write_diagnostics_row(std::ostream& os, const StepRecord& r) {
  os << std::setprecision(17) << r.t << "," << r.dt << "," << r.eff_courant << "," << r.mass << ","
     << r.mom[0] << "," << r.mom[1] << "," << r.mom[2] << "," << r.e_hydro << "," << r.e_mag << ",";
  if (std::isfinite(r.helicity)) os << r.helicity;  // blank when not computed
  os << "," << r.divb_l2 << "," << r.divb_linf << "," << r.cg_b << "," << r.cg_p << ","
     << r.picard << "\n";
}

}  // namespace smhd
