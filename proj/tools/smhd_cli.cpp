// smhd command line: run a case, sweep the Alfven wave, or run the
// built-in property checks.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smhd/acoustic.hpp"
#include "smhd/alfven.hpp"
#include "smhd/cases.hpp"
#include "smhd/driver.hpp"
#include "smhd/errors.hpp"
#include "smhd/io.hpp"
#include "smhd/vecpot.hpp"

namespace fs = std::filesystem;
using namespace smhd;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "--theta-b 0.55" and "--theta_b=0.55" both become theta_b = 0.55.
Settings flag_settings(const std::vector<std::string>& extra) {
  Settings out;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    std::string a = extra[i];
    if (a.rfind("--", 0) != 0) throw ConfigError("unexpected argument '" + a + "'");
    a.erase(0, 2);
    std::string key = a, value;
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      key = a.substr(0, eq);
      value = a.substr(eq + 1);
    } else {
      if (i + 1 >= extra.size()) throw ConfigError("flag --" + a + " needs a value");
      value = extra[++i];
    }
    for (char& ch : key)
      if (ch == '-') ch = '_';
    out.emplace_back(key, value);
  }
  return out;
}

Settings set_settings(const std::vector<std::string>& sets) {
  Settings out;
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return out;
}

struct Sources {
  std::string config;
  std::string case_name;
  std::vector<std::string> sets;
};

CaseSpec resolve_sources(const Sources& src, const std::vector<std::string>& extra, RunOptions& o) {
  std::vector<Settings> all;
  if (!src.config.empty()) all.push_back(parse_config_file(src.config));
  all.push_back(set_settings(src.sets));
  all.push_back(flag_settings(extra));
  std::string name = src.case_name;
  return resolve(name, all, o);
}

std::string cut_tag(const std::string& cut) {
  std::string t = cut;
  for (char& ch : t)
    if (ch == '.' || ch == '-') ch = ch == '.' ? 'p' : 'm';
  return t;
}

int cmd_run(const Sources& src, const std::vector<std::string>& extra) {
  RunOptions o;
  CaseSpec c = resolve_sources(src, extra, o);
  const fs::path dir = output_root() / o.output_dir;
  fs::create_directories(dir);
  write_settings(dir / "config.resolved", describe(c, o));
  {
    std::ofstream v(dir / "VERSION");
    v << kVersion << "\n";
  }

  Simulation sim(init_case(c), c.cfg, c.tf);
  const Grid& g = sim.state().g();
  std::ofstream diag(dir / "diagnostics.csv");
  if (!diag) throw ConfigError("cannot write " + (dir / "diagnostics.csv").string());
  write_diagnostics_header(diag);

  Field1 a_guess(g);
  auto fill_helicity = [&](const MhdState& s, StepRecord& r) {
    const VecPotResult vp = vector_potential(g, s.B, {}, &a_guess);
    a_guess = vp.A;
    r.helicity = helicity(g, vp.A, s.B);
  };
  StepRecord r0 = sim.history().front();
  if (o.helicity_every > 0) fill_helicity(sim.state(), r0);
  write_diagnostics_row(diag, r0);

  long step = 0;
  sim.run(
      [&](const MhdState& s, StepRecord& r) {
        ++step;
        if (o.helicity_every > 0 && step % o.helicity_every == 0) fill_helicity(s, r);
        write_diagnostics_row(diag, r);
        if (o.output_every > 0 && step % o.output_every == 0) {
          char name[64];
          std::snprintf(name, sizeof name, "fields_%06ld.vtk", step);
          write_vtk(dir / name, s);
        }
      },
      o.max_steps);

  const MhdState& s = sim.state();
  write_vtk(dir / "fields_final.vtk", s);
  for (const std::string& cut : split(o.cut, ','))
    write_cut(dir / ("cut_" + cut_tag(cut) + ".csv"), s, cut);

  const StepRecord& last = sim.history().back();
  std::printf("%s: case %s, %ld steps, t = %.6g, divB_Linf = %.3e\n", kVersion, c.name.c_str(), step,
              s.t, last.divb_linf);
  if (c.name == "alfven") {
    const AlfvenErrors e = alfven_errors(c, s);
    std::printf("L2 errors: vx %.4e  vy %.4e  Bx %.4e  By %.4e\n", e.vx.l2, e.vy.l2, e.bx.l2, e.by.l2);
  }
  std::printf("outputs in %s\n", dir.string().c_str());
  return 0;
}

int cmd_convergence(const Sources& src, const std::vector<std::string>& extra,
                    const std::string& resolutions) {
  std::vector<int> ns;
  for (const std::string& t : split(resolutions, ',')) ns.push_back(std::stoi(t));
  if (ns.empty()) throw ConfigError("no resolutions given");

  std::vector<AlfvenErrors> errs;
  for (int n : ns) {
    RunOptions o;
    Sources s2 = src;
    s2.case_name = "alfven";
    s2.sets.push_back("nx=" + std::to_string(n));
    s2.sets.push_back("ny=" + std::to_string(n));
    CaseSpec c = resolve_sources(s2, extra, o);
    Simulation sim(init_case(c), c.cfg, c.tf);
    sim.run();
    errs.push_back(alfven_errors(c, sim.state()));
  }

  auto order = [&](double a, double b, int na, int nb) {
    return std::log(a / b) / std::log(double(nb) / double(na));
  };
  const char* names[4] = {"v_x", "v_y", "B_x", "B_y"};
  std::printf("%-4s %6s %12s %12s %12s %7s %7s %7s\n", "", "N", "L1", "L2", "Linf", "L1 or", "L2 or",
              "Linf or");
  for (int q = 0; q < 4; ++q) {
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const Norms* e[4] = {&errs[k].vx, &errs[k].vy, &errs[k].bx, &errs[k].by};
      std::printf("%-4s %4d^2 %12.3e %12.3e %12.3e", k == 0 ? names[q] : "", ns[k], e[q]->l1, e[q]->l2,
                  e[q]->linf);
      if (k > 0) {
        const Norms* p[4] = {&errs[k - 1].vx, &errs[k - 1].vy, &errs[k - 1].bx, &errs[k - 1].by};
        std::printf(" %7.2f %7.2f %7.2f", order(p[q]->l1, e[q]->l1, ns[k - 1], ns[k]),
                    order(p[q]->l2, e[q]->l2, ns[k - 1], ns[k]),
                    order(p[q]->linf, e[q]->linf, ns[k - 1], ns[k]));
      } else {
        std::printf(" %7s %7s %7s", "---", "---", "---");
      }
      std::printf("\n");
    }
  }
  return 0;
}

// Quick property suite. Each line is one check.
int cmd_selftest() {
  int failed = 0;
  auto report = [&](const char* name, bool ok, double val, double thr) {
    std::printf("%-4s %-40s %.3e (limit %.1e)\n", ok ? "PASS" : "FAIL", name, val, thr);
    if (!ok) ++failed;
  };
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  auto fill = [&](Vec& v) {
    for (double& x : v) x = U(rng);
  };

  const GridPtr gp = make_grid({8, 8, 8}, {0, 0, 0}, {1, 1, 1}, {Bc::periodic, Bc::periodic, Bc::periodic});
  const Grid& g = *gp;
  {
    Field0 p(g);
    Field1 u(g);
    fill(p.v);
    fill(u.v);
    const double cg = norm_inf(curl(g, grad(g, p)).v), dc = norm_inf(div(g, curl(g, u)).v);
    const double thr = 1e-13 / (g.d(0) * g.d(0));
    report("curl grad = 0", cg <= thr, cg, thr);
    report("div curl = 0", dc <= thr, dc, thr);
  }
  {
    Field1 u(g), y(g);
    Field2 b(g);
    fill(u.v);
    fill(y.v);
    fill(b.v);
    const double adj = std::abs(dot(curl(g, u).v, b.v) - dot(u.v, curl_T(g, b).v));
    report("curl adjoint", adj <= 1e-12 * norm2(u.v) * norm2(b.v), adj, 1e-12);
    for (CrossKind k : {CrossKind::standard, CrossKind::orthogonal}) {
      const CrossOp P(g, b, k);
      const double sk = std::abs(dot(y.v, P.apply(u).v) + dot(u.v, P.apply(y).v));
      report(k == CrossKind::standard ? "cross skew (standard)" : "cross skew (orthogonal)",
             sk <= 1e-13 * norm2(u.v) * norm2(y.v) * norm_inf(b.v), sk, 1e-13);
    }
    const CrossOp P(g, b, CrossKind::orthogonal);
    const double orth = std::abs(g.vol() * dot(project_p1(g, b).v, P.apply(u).v));
    report("cross orthogonality", orth <= 1e-13 * norm2(u.v) * norm2(b.v), orth, 1e-13);
  }
  {
    CaseSpec c = case_defaults("rp0");
    const MhdState s0 = init_case(c);
    Simulation sim(s0, c.cfg, c.tf);
    sim.run();
    double dmax = 0.0;
    const MhdState& s = sim.state();
    for (std::size_t i = 0; i < s.rho.size(); ++i) dmax = std::max(dmax, std::abs(s.rho.v[i] - s0.rho.v[i]));
    for (std::size_t i = 0; i < s.B.size(); ++i) dmax = std::max(dmax, std::abs(s.B.v[i] - s0.B.v[i]));
    report("rp0 contact preserved", dmax <= 1e-12, dmax, 1e-12);
  }
  {
    CaseSpec c = case_defaults("ot");
    c.n = {32, 32, 1};
    Simulation sim(init_case(c), c.cfg, c.tf);
    const Totals t0 = totals(sim.state());
    sim.run({}, 5);
    const Totals t1 = totals(sim.state());
    const double dm = std::abs(t1.mass - t0.mass) / t0.mass;
    const double de = std::abs(t1.energy - t0.energy) / t0.energy;
    report("ot mass conservation", dm <= 1e-12, dm, 1e-12);
    report("ot energy conservation", de <= 1e-12, de, 1e-12);
    report("ot div B", sim.history().back().divb_linf <= 1e-10, sim.history().back().divb_linf, 1e-10);
  }
  std::printf("%s\n", failed == 0 ? "selftest passed" : "selftest FAILED");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-implicit staggered MHD solver"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Sources src;
  auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--config", src.config, "key = value configuration file");
    sub->add_option("--case", src.case_name, "case name (overrides the file)");
    sub->add_option("--set", src.sets, "key=value override (repeatable)");
    sub->allow_extras();
  };

  CLI::App* run = app.add_subcommand("run", "run one case; other --key value flags override settings");
  add_sources(run);

  std::string resolutions = "20,40,80";
  CLI::App* conv = app.add_subcommand("convergence", "Alfven wave error and order table");
  add_sources(conv);
  conv->add_option("--resolutions", resolutions, "comma separated cells per axis");

  CLI::App* self = app.add_subcommand("selftest", "built-in property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(src, run->remaining());
    if (*conv) return cmd_convergence(src, conv->remaining(), resolutions);
    if (*self) return cmd_selftest();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
