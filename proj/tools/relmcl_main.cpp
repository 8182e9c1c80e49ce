#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "relmcl/io.hpp"
#include "relmcl/metrics.hpp"
#include "relmcl/scenario.hpp"
#include "relmcl/sweep.hpp"

namespace {

using namespace relmcl;

struct CommonOpts {
  std::string trace_out;
  long long seed = -1;
  int steps = -1;
  int skip_transient = 10;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_trace = true) {
  if (with_trace)
    cmd->add_option("--trace", opts.trace_out, "write the run trace to this CSV");
  cmd->add_option("--seed", opts.seed, "override the config seed");
  cmd->add_option("--steps", opts.steps, "override the number of steps");
  cmd->add_option("--skip-transient", opts.skip_transient,
                  "steps to drop before computing RMSE (default 10)");
}

void apply_overrides(ScenarioConfig& cfg, const CommonOpts& opts) {
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
  if (opts.steps > 0) cfg.n_steps = opts.steps;
}

int run_simulate(const std::string& config_path, const CommonOpts& opts) {
  ScenarioConfig cfg = read_scenario_json(config_path);
  apply_overrides(cfg, opts);
  ScenarioTrace trace = run_scenario(cfg);

  double whole = rmse(trace, 0);
  std::printf("estimator      %s\n", estimator_name(cfg.filter.estimator));
  std::printf("steps          %d @ %g Hz (seed %llu)\n", cfg.n_steps, cfg.f_hz,
              static_cast<unsigned long long>(cfg.seed));
  std::printf("rmse           %.6f m\n", whole);
  if (opts.skip_transient > 0 &&
      static_cast<std::size_t>(opts.skip_transient) < trace.steps.size())
    std::printf("rmse (skip %d) %.6f m\n", opts.skip_transient,
                rmse(trace, opts.skip_transient));
  const TraceStep& last = trace.steps.back();
  std::printf("final          r=[%.4f, %.4f]  rhat=[%.4f, %.4f]  err=%.4f m\n",
              last.r_true.x, last.r_true.y, last.r_hat.x, last.r_hat.y, last.err);
  if (!opts.trace_out.empty()) {
    write_trace_csv(opts.trace_out, trace);
    std::printf("trace          %s (%zu rows)\n", opts.trace_out.c_str(),
                trace.steps.size());
  }
  return std::isfinite(whole) ? 0 : 1;
}

int run_sweep_cmd(const std::string& spec_path, const std::string& out_csv,
                  const CommonOpts& opts) {
  SweepSpec spec = read_sweep_json(spec_path);
  apply_overrides(spec.base, opts);
  if (opts.skip_transient >= 0) spec.skip_transient = opts.skip_transient;
  SweepResult result = run_sweep(spec);

  std::printf("axis: %s, %d repeats, seeds %llu..%llu, skip %d\n",
              sweep_axis_name(spec.axis), spec.repeats,
              static_cast<unsigned long long>(spec.base.seed),
              static_cast<unsigned long long>(spec.base.seed +
                                              static_cast<std::uint64_t>(spec.repeats - 1)),
              spec.skip_transient);
  std::printf("%-14s %-12s %-12s %s\n", "value", "mean_rmse", "std_rmse", "n");
  bool all_finite = true;
  for (const auto& agg : result.aggregates) {
    std::printf("%-14s %-12.6f %-12.6f %d\n", agg.label.c_str(), agg.mean,
                agg.stddev, agg.n);
    if (!std::isfinite(agg.mean)) all_finite = false;
  }
  if (!out_csv.empty()) {
    write_sweep_csv(out_csv, spec.axis, result);
    std::printf("runs written to %s\n", out_csv.c_str());
  }
  return all_finite ? 0 : 1;
}

int run_calibrate(const std::string& csv_path) {
  auto samples = read_calibration_csv(csv_path);
  RangeNoiseModel model = calibrate(samples);
  for (int i = 0; i < 3; ++i)
    std::printf("anchor %d: bias=%.6f m, sigma=%.6f m\n", i + 1,
                model.bias[static_cast<std::size_t>(i)],
                model.sigma[static_cast<std::size_t>(i)]);
  return 0;
}

int run_replay(const std::string& trace_path, const std::string& estimator,
               const std::string& config_path, const CommonOpts& opts) {
  ScenarioTrace logged = read_trace_csv(trace_path);
  if (logged.steps.empty()) {
    std::fprintf(stderr, "error: %s has no rows\n", trace_path.c_str());
    return 1;
  }

  ScenarioConfig cfg;
  if (!config_path.empty()) {
    cfg = read_scenario_json(config_path);
  } else {
    // Defaults for replaying a bare trace; --config supplies the real layout
    // and filter parameters when available.
    cfg.init_region = {{-5.0, -5.0}, {5.0, 5.0}};
  }
  cfg.filter.estimator = estimator_from_name(estimator);
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);

  Rng rng(cfg.seed);
  double ts = cfg.ts();
  const FilterSpec& fs = cfg.filter;
  DualMclConfig dual_cfg{fs.m, fs.sigma_obs, fs.sigma_mot, ts, fs.bandwidth, cfg.layout};
  StandardPfConfig pf_cfg{fs.m, fs.sigma_mot, fs.pf_sigma_range, ts, cfg.layout};
  EkfConfig ekf_cfg{fs.ekf_process_sigma, fs.ekf_meas_sigma, ts, cfg.layout};
  FilterState state;
  EkfState ekf_state;
  if (cfg.filter.estimator == EstimatorKind::ekf)
    ekf_state = init_ekf(cfg.init_region, fs.ekf_init_v_sigma);
  else
    state = init_filter(cfg.init_region, fs.m, rng);

  ScenarioTrace replayed = logged;
  Vec2 v0_prev{0.0, 0.0};  // command of the previous row drives propagation
  for (std::size_t k = 0; k < logged.steps.size(); ++k) {
    const TraceStep& row = logged.steps[k];
    FilterEstimate est;
    switch (cfg.filter.estimator) {
      case EstimatorKind::dual_mcl:
        est = dual_mcl_step(state, row.d, v0_prev, dual_cfg, rng);
        break;
      case EstimatorKind::standard_pf:
        est = standard_pf_step(state, row.d, v0_prev, pf_cfg, rng);
        break;
      case EstimatorKind::ekf:
        est = ekf_step(ekf_state, row.d, v0_prev, ekf_cfg);
        break;
    }
    replayed.steps[k].r_hat = est.r_hat;
    replayed.steps[k].v1_hat = est.v1_hat;
    replayed.steps[k].err = norm(row.r_true - est.r_hat);
    v0_prev = row.v0_cmd;
  }

  double whole = rmse(replayed, 0);
  std::printf("replayed %zu steps with %s\n", replayed.steps.size(),
              estimator_name(cfg.filter.estimator));
  std::printf("rmse           %.6f m\n", whole);
  if (opts.skip_transient > 0 &&
      static_cast<std::size_t>(opts.skip_transient) < replayed.steps.size())
    std::printf("rmse (skip %d) %.6f m\n", opts.skip_transient,
                rmse(replayed, opts.skip_transient));
  return std::isfinite(whole) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar relative localization from three UWB ranges: simulator, "
               "parameter sweeps, calibration, and trace replay"};
  app.require_subcommand(1);

  std::string config_path, spec_path, csv_path, trace_path;
  std::string out_csv, estimator = "dual_mcl", replay_config;
  CommonOpts sim_opts, sweep_opts, replay_opts;

  CLI::App* sim = app.add_subcommand("simulate", "run one scenario");
  sim->add_option("config", config_path, "scenario JSON")->required();
  add_common(sim, sim_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  sweep->add_option("spec", spec_path, "sweep JSON")->required();
  sweep->add_option("--out", out_csv, "write per-run results to this CSV");
  add_common(sweep, sweep_opts, false);

  CLI::App* cal = app.add_subcommand("calibrate", "fit per-anchor bias and noise");
  cal->add_option("records", csv_path, "calibration CSV")->required();

  CLI::App* rep = app.add_subcommand("replay", "re-run an estimator over a logged trace");
  rep->add_option("trace", trace_path, "trace CSV")->required();
  rep->add_option("--estimator", estimator, "dual_mcl, standard_pf, or ekf")->required();
  rep->add_option("--config", replay_config, "scenario JSON for layout and filter params");
  // no --trace here: it would collide with the positional, and replay's output
  // is the printed summary
  add_common(rep, replay_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return run_simulate(config_path, sim_opts);
    if (sweep->parsed()) return run_sweep_cmd(spec_path, out_csv, sweep_opts);
    if (cal->parsed()) return run_calibrate(csv_path);
    if (rep->parsed()) return run_replay(trace_path, estimator, replay_config, replay_opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
