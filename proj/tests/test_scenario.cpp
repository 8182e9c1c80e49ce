#include <cmath>

#include "doctest.h"
#include "relmcl/io.hpp"
#include "relmcl/scenario.hpp"

using namespace relmcl;

namespace {

ScenarioConfig baseline() {
  ScenarioConfig cfg;
  cfg.seed = 7;
  cfg.f_hz = 10.0;
  cfg.n_steps = 30;
  cfg.layout = AnchorLayout{0.44};
  cfg.noise.sigma = {0.05, 0.05, 0.05};
  cfg.init_region = {{-4.2, -0.2}, {-0.2, 3.8}};
  cfg.robot0.init = {{0.0, 0.0}, {0.0, 0.2}};
  cfg.robot0.sigma_mot = {0.02, 0.02};
  cfg.robot1.init = {{-2.0, 2.0}, {0.0, 0.3}};
  cfg.robot1.sigma_mot = {0.02, 0.02};
  cfg.actuation0.kind = AnchorActuation::Kind::profile;
  cfg.actuation0.profile = VelocityProfile::constant({0.0, 0.2});
  cfg.profile1 = VelocityProfile::constant({0.0, 0.3});
  cfg.filter.estimator = EstimatorKind::dual_mcl;
  cfg.filter.m = 100;
  cfg.filter.sigma_obs = {0.5, 0.5};
  cfg.filter.sigma_mot = {0.7071067811865476, 0.7071067811865476};
  return cfg;
}

bool same_step(const TraceStep& a, const TraceStep& b) {
  return a.k == b.k && a.t == b.t && a.r_true == b.r_true && a.d.d1 == b.d.d1 &&
         a.d.d2 == b.d.d2 && a.d.d3 == b.d.d3 && a.r_meas == b.r_meas &&
         a.r_hat == b.r_hat && a.v1_hat == b.v1_hat && a.v0_cmd == b.v0_cmd &&
         a.err == b.err;
}

}  // namespace

TEST_CASE("trace is a pure function of the config") {
  ScenarioConfig cfg = baseline();
  ScenarioTrace a = run_scenario(cfg);
  ScenarioTrace b = run_scenario(cfg);
  REQUIRE(a.steps.size() == b.steps.size());
  REQUIRE(a.steps.size() == 30);
  for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(same_step(a.steps[i], b.steps[i]));
  // ... and a different seed gives different measurements.
  cfg.seed = 8;
  ScenarioTrace c = run_scenario(cfg);
  CHECK(c.steps[0].d.d1 != a.steps[0].d.d1);
}

TEST_CASE("rows are indexed on the loop clock") {
  ScenarioConfig cfg = baseline();
  ScenarioTrace tr = run_scenario(cfg);
  for (int k = 0; k < cfg.n_steps; ++k) {
    const TraceStep& row = tr.steps[static_cast<std::size_t>(k)];
    CHECK(row.k == k);
    CHECK(row.t == static_cast<double>(k) * cfg.ts());
    CHECK(row.err == norm(row.r_true - row.r_hat));
  }
}

TEST_CASE("loop order is sense, estimate, command, integrate") {
  ScenarioConfig cfg = baseline();
  cfg.n_steps = 3;
  ScenarioTrace tr = run_scenario(cfg);

  // Replay the documented loop with the library primitives and one shared RNG.
  Rng rng(cfg.seed);
  FilterState fstate = init_filter(cfg.init_region, cfg.filter.m, rng);
  DualMclConfig dcfg{cfg.filter.m, cfg.filter.sigma_obs, cfg.filter.sigma_mot,
                     cfg.ts(), cfg.filter.bandwidth, cfg.layout};
  RobotState r0 = cfg.robot0.init;
  RobotState r1 = cfg.robot1.init;
  Vec2 v0_prev = r0.v;

  for (int k = 0; k < cfg.n_steps; ++k) {
    double t = static_cast<double>(k) * cfg.ts();
    const TraceStep& row = tr.steps[static_cast<std::size_t>(k)];

    Vec2 r_true = r1.p - r0.p;
    CHECK(row.r_true == r_true);

    RangeTriple truth = true_ranges(r_true, cfg.layout);
    RangeTriple d = corrupt_ranges(truth, cfg.noise, rng);
    CHECK(row.d.d1 == d.d1);
    CHECK(row.d.d2 == d.d2);
    CHECK(row.d.d3 == d.d3);
    CHECK(row.r_meas == construct_measurement(d, cfg.layout).r_meas);

    FilterEstimate est = dual_mcl_step(fstate, d, v0_prev, dcfg, rng);
    CHECK(row.r_hat == est.r_hat);
    CHECK(row.v1_hat == est.v1_hat);

    Vec2 v0_des = profile_velocity(cfg.actuation0.profile, t);
    Vec2 v1_des = profile_velocity(cfg.profile1, t);
    CHECK(row.v0_cmd == v0_des);

    v0_prev = r0.v;
    Vec2 a0 = velocity_tracking_accel(r0.v, v0_des, cfg.ts(), cfg.robot0.limits);
    r0 = step_robot(r0, a0, cfg.robot0.limits, cfg.robot0.sigma_mot, cfg.ts(), rng);
    Vec2 a1 = velocity_tracking_accel(r1.v, v1_des, cfg.ts(), cfg.robot1.limits);
    r1 = step_robot(r1, a1, cfg.robot1.limits, cfg.robot1.sigma_mot, cfg.ts(), rng);
  }
}

TEST_CASE("closed loop with an all-covering dead zone equals a zero profile") {
  ScenarioConfig open = baseline();
  open.actuation0.kind = AnchorActuation::Kind::profile;
  open.actuation0.profile = VelocityProfile::constant({0.0, 0.0});

  ScenarioConfig closed = baseline();
  closed.actuation0.kind = AnchorActuation::Kind::formation;
  closed.actuation0.goal.r_des = {2.0, 2.0};
  closed.actuation0.goal.k_v = 1.0;
  closed.actuation0.goal.deadzone = 1e9;  // command is pinned to zero
  closed.actuation0.goal.v_limit = {2.0, 2.0};

  ScenarioTrace a = run_scenario(open);
  ScenarioTrace b = run_scenario(closed);
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(same_step(a.steps[i], b.steps[i]));
}

TEST_CASE("closed-loop command is the controller applied to the logged estimate") {
  ScenarioConfig cfg = baseline();
  cfg.actuation0.kind = AnchorActuation::Kind::formation;
  cfg.actuation0.goal.r_des = {-2.0, 2.0};
  cfg.actuation0.goal.k_v = 1.0;
  cfg.actuation0.goal.deadzone = 0.2;
  cfg.actuation0.goal.v_limit = {2.0, 2.0};

  ScenarioTrace tr = run_scenario(cfg);
  for (const TraceStep& row : tr.steps) {
    Vec2 expect = formation_control(row.r_hat, cfg.actuation0.goal);
    CHECK(row.v0_cmd == expect);
  }
}

TEST_CASE("every estimator runs the same scenario to the end") {
  for (EstimatorKind kind :
       {EstimatorKind::dual_mcl, EstimatorKind::standard_pf, EstimatorKind::ekf}) {
    ScenarioConfig cfg = baseline();
    cfg.filter.estimator = kind;
    cfg.filter.pf_sigma_range = {0.3, 0.3, 0.3};
    ScenarioTrace tr = run_scenario(cfg);
    REQUIRE(tr.steps.size() == 30);
    for (const TraceStep& row : tr.steps) {
      CHECK(std::isfinite(row.err));
      CHECK(finite(row.r_hat));
    }
  }
}

TEST_CASE("dual filter localizes from the global init region") {
  ScenarioConfig cfg = baseline();
  cfg.n_steps = 60;
  cfg.filter.m = 300;
  ScenarioTrace tr = run_scenario(cfg);
  CHECK(tr.steps.back().err < 1.0);
}

TEST_CASE("scenario validation names the offending field") {
  ScenarioConfig cfg = baseline();
  cfg.f_hz = 0.0;
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "f_hz must be positive and finite",
                       std::invalid_argument);

  cfg = baseline();
  cfg.n_steps = 0;
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "n_steps must be at least 1",
                       std::invalid_argument);

  cfg = baseline();
  cfg.layout.a = -0.1;
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "anchor_a must be positive",
                       std::invalid_argument);

  cfg = baseline();
  cfg.init_region = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "init_region is empty (lo > hi)",
                       std::invalid_argument);

  cfg = baseline();
  cfg.noise.sigma[1] = -0.05;
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "noise.sigma must be nonnegative",
                       std::invalid_argument);

  cfg = baseline();
  cfg.filter.m = 0;
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "filter.m must be at least 1",
                       std::invalid_argument);

  cfg = baseline();
  cfg.filter.sigma_obs = {0.0, 0.5};
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "filter.sigma_obs must be positive",
                       std::invalid_argument);

  cfg = baseline();
  cfg.robot1.limits.v_min = {3.0, 0.0};
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);
}

TEST_CASE("estimator names round-trip") {
  for (EstimatorKind kind :
       {EstimatorKind::dual_mcl, EstimatorKind::standard_pf, EstimatorKind::ekf})
    CHECK(estimator_from_name(estimator_name(kind)) == kind);
  CHECK_THROWS_AS(estimator_from_name("kalman"), std::invalid_argument);
}
