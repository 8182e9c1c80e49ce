#include "relmcl/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relmcl {

const char* estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::dual_mcl: return "dual_mcl";
    case EstimatorKind::standard_pf: return "standard_pf";
    case EstimatorKind::ekf: return "ekf";
  }
  return "?";
}

EstimatorKind estimator_from_name(const std::string& name) {
  if (name == "dual_mcl") return EstimatorKind::dual_mcl;
  if (name == "standard_pf") return EstimatorKind::standard_pf;
  if (name == "ekf") return EstimatorKind::ekf;
  throw std::invalid_argument("unknown estimator '" + name +
                              "' (expected dual_mcl, standard_pf, or ekf)");
}

namespace {

void check_limits(const RobotLimits& lim, const std::string& who) {
  if (lim.v_min.x > lim.v_max.x || lim.v_min.y > lim.v_max.y)
    throw std::invalid_argument(who + ": v_min exceeds v_max");
  if (lim.a_min.x > lim.a_max.x || lim.a_min.y > lim.a_max.y)
    throw std::invalid_argument(who + ": a_min exceeds a_max");
}

void check_robot(const RobotSpec& r, const std::string& who) {
  check_limits(r.limits, who);
  if (r.sigma_mot.x < 0.0 || r.sigma_mot.y < 0.0)
    throw std::invalid_argument(who + ": sigma_mot must be nonnegative");
  if (!finite(r.init.p) || !finite(r.init.v))
    throw std::invalid_argument(who + ": initial state must be finite");
}

// One scenario's estimator; dispatches per configured kind.
class Estimator {
 public:
  Estimator(const ScenarioConfig& cfg, Rng& rng) : kind_(cfg.filter.estimator) {
    const FilterSpec& fs = cfg.filter;
    switch (kind_) {
      case EstimatorKind::dual_mcl:
        dual_cfg_ = DualMclConfig{fs.m, fs.sigma_obs, fs.sigma_mot, cfg.ts(),
                                  fs.bandwidth, cfg.layout};
        state_ = init_filter(cfg.init_region, fs.m, rng);
        break;
      case EstimatorKind::standard_pf:
        pf_cfg_ = StandardPfConfig{fs.m, fs.sigma_mot, fs.pf_sigma_range, cfg.ts(),
                                   cfg.layout};
        state_ = init_filter(cfg.init_region, fs.m, rng);
        break;
      case EstimatorKind::ekf:
        ekf_cfg_ = EkfConfig{fs.ekf_process_sigma, fs.ekf_meas_sigma, cfg.ts(),
                             cfg.layout};
        ekf_state_ = init_ekf(cfg.init_region, fs.ekf_init_v_sigma);
        break;
    }
  }

  FilterEstimate step(const RangeTriple& d, const Vec2& v0, Rng& rng) {
    switch (kind_) {
      case EstimatorKind::dual_mcl:
        return dual_mcl_step(state_, d, v0, dual_cfg_, rng);
      case EstimatorKind::standard_pf:
        return standard_pf_step(state_, d, v0, pf_cfg_, rng);
      case EstimatorKind::ekf:
        return ekf_step(ekf_state_, d, v0, ekf_cfg_);
    }
    throw std::logic_error("unreachable");
  }

 private:
  EstimatorKind kind_;
  DualMclConfig dual_cfg_;
  StandardPfConfig pf_cfg_;
  EkfConfig ekf_cfg_;
  FilterState state_;
  EkfState ekf_state_;
};

}  // namespace

void validate_scenario(const ScenarioConfig& cfg) {
  if (!(cfg.f_hz > 0.0) || !std::isfinite(cfg.f_hz))
    throw std::invalid_argument("f_hz must be positive and finite");
  if (cfg.n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");
  if (cfg.layout.a <= 0.0) throw std::invalid_argument("anchor_a must be positive");
  for (double s : cfg.noise.sigma)
    if (s < 0.0) throw std::invalid_argument("noise.sigma must be nonnegative");
  if (!cfg.init_region.valid())
    throw std::invalid_argument("init_region is empty (lo > hi)");
  check_robot(cfg.robot0, "anchor_robot");
  check_robot(cfg.robot1, "tag_robot");
  if (cfg.actuation0.kind == AnchorActuation::Kind::profile)
    validate_profile(cfg.actuation0.profile);
  else {
    const FormationGoal& g = cfg.actuation0.goal;
    if (g.k_v <= 0.0) throw std::invalid_argument("formation k_v must be positive");
    if (g.deadzone < 0.0) throw std::invalid_argument("formation deadzone must be nonnegative");
    if (g.v_limit.x <= 0.0 || g.v_limit.y <= 0.0)
      throw std::invalid_argument("formation v_limit must be positive");
  }
  validate_profile(cfg.profile1);

  const FilterSpec& fs = cfg.filter;
  if (fs.m < 1) throw std::invalid_argument("filter.m must be at least 1");
  if (fs.sigma_obs.x <= 0.0 || fs.sigma_obs.y <= 0.0)
    throw std::invalid_argument("filter.sigma_obs must be positive");
  if (fs.sigma_mot.x < 0.0 || fs.sigma_mot.y < 0.0)
    throw std::invalid_argument("filter.sigma_mot must be nonnegative");
  if (fs.bandwidth.kind == BandwidthKind::fixed && fs.bandwidth.fixed_h <= 0.0)
    throw std::invalid_argument("filter.kde_bandwidth fixed value must be positive");
  for (double s : fs.pf_sigma_range)
    if (s <= 0.0) throw std::invalid_argument("filter.pf_sigma_range must be positive");
  for (double s : fs.ekf_meas_sigma)
    if (s <= 0.0) throw std::invalid_argument("filter.ekf_meas_sigma must be positive");
  for (double s : fs.ekf_process_sigma)
    if (s < 0.0) throw std::invalid_argument("filter.ekf_process_sigma must be nonnegative");
}

ScenarioTrace run_scenario(const ScenarioConfig& cfg) {
  validate_scenario(cfg);

  Rng rng(cfg.seed);
  double ts = cfg.ts();
  RobotState r0 = cfg.robot0.init;
  RobotState r1 = cfg.robot1.init;
  Estimator estimator(cfg, rng);

  // Anchor velocity over the interval that precedes the current measurement;
  // the filter propagates last step's belief with it.
  Vec2 v0_prev = r0.v;

  ScenarioTrace trace;
  trace.steps.reserve(static_cast<std::size_t>(cfg.n_steps));

  for (int k = 0; k < cfg.n_steps; ++k) {
    double t = static_cast<double>(k) * ts;
    if (!finite(r0.p) || !finite(r0.v) || !finite(r1.p) || !finite(r1.v))
      throw std::runtime_error("non-finite robot state at step " + std::to_string(k));

    TraceStep row;
    row.k = k;
    row.t = t;
    row.r_true = r1.p - r0.p;

    RangeTriple truth = true_ranges(row.r_true, cfg.layout);
    row.d = corrupt_ranges(truth, cfg.noise, rng);
    row.r_meas = construct_measurement(row.d, cfg.layout).r_meas;

    FilterEstimate est = estimator.step(row.d, v0_prev, rng);
    if (!finite(est.r_hat) || !finite(est.v1_hat))
      throw std::runtime_error("non-finite estimate at step " + std::to_string(k));
    row.r_hat = est.r_hat;
    row.v1_hat = est.v1_hat;
    row.err = norm(row.r_true - row.r_hat);

    Vec2 v0_des;
    if (cfg.actuation0.kind == AnchorActuation::Kind::formation)
      v0_des = formation_control(est.r_hat, cfg.actuation0.goal);
    else
      v0_des = profile_velocity(cfg.actuation0.profile, t);
    Vec2 v1_des = profile_velocity(cfg.profile1, t);
    row.v0_cmd = v0_des;
    trace.steps.push_back(row);

    v0_prev = r0.v;
    Vec2 a0 = velocity_tracking_accel(r0.v, v0_des, ts, cfg.robot0.limits);
    r0 = step_robot(r0, a0, cfg.robot0.limits, cfg.robot0.sigma_mot, ts, rng);
    Vec2 a1 = velocity_tracking_accel(r1.v, v1_des, ts, cfg.robot1.limits);
    r1 = step_robot(r1, a1, cfg.robot1.limits, cfg.robot1.sigma_mot, ts, rng);
  }
  return trace;
}

}  // namespace relmcl
