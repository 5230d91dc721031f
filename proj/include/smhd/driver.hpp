#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "smhd/state.hpp"

namespace smhd {

/// Denominator of the CFL condition with hyperbolic kind k:
/// sum_a max lambda_a / dx_a + 2 max lambda^p sum_a 1 / dx_a^2.
double cfl_denominator(const MhdState& s, LambdaKind k);

/// CFL step, capped at tf - t. A vanishing denominator returns tf - t.
double compute_dt(const MhdState& s, const SolverConfig& cfg, double tf);

struct StepRecord {
  double t = 0.0;
  double dt = 0.0;
  double eff_courant = 0.0;
  double mass = 0.0;
  V3 mom{0.0, 0.0, 0.0};
  double e_hydro = 0.0;
  double e_mag = 0.0;
  double helicity = std::numeric_limits<double>::quiet_NaN();
  double divb_l2 = 0.0;
  double divb_linf = 0.0;
  int cg_b = 0;
  int cg_p = 0;
  int cg_r = 0;
  int picard = 0;
  int neg_p = 0;
};

StepRecord record(const MhdState& s, double dt, double cfl);

/// One Strang-split step of size dt: resistive(dt/2), FV, R x (Alfven,
/// acoustic), resistive(dt/2).
StepRecord advance(MhdState& s, const SolverConfig& cfg, double dt);

/// Time loop to tf. The observer sees the state after every step and may
/// fill the helicity column.
class Simulation {
 public:
  Simulation(MhdState s, SolverConfig cfg, double tf);
  const MhdState& state() const { return s_; }
  MhdState& state() { return s_; }
  const SolverConfig& config() const { return cfg_; }
  const std::vector<StepRecord>& history() const { return hist_; }
  double tf() const { return tf_; }
  bool done() const;
  const StepRecord& step();
  void run(const std::function<void(const MhdState&, StepRecord&)>& observer = {},
           long max_steps = -1);

 private:
  MhdState s_;
  SolverConfig cfg_;
  double tf_;
  double dt_prev_ = 0.0;
  std::vector<StepRecord> hist_;
};

}  // namespace smhd
