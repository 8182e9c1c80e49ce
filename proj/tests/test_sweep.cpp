#include <cmath>

#include "doctest.h"
#include "relmcl/metrics.hpp"
#include "relmcl/sweep.hpp"

using namespace relmcl;

namespace {

ScenarioConfig small_base() {
  ScenarioConfig cfg;
  cfg.seed = 11;
  cfg.f_hz = 10.0;
  cfg.n_steps = 25;
  cfg.layout = AnchorLayout{0.44};
  cfg.noise.sigma = {0.05, 0.05, 0.05};
  cfg.init_region = {{-4.2, -0.2}, {-0.2, 3.8}};
  cfg.robot0.init = {{0.0, 0.0}, {0.0, 0.2}};
  cfg.robot1.init = {{-2.0, 2.0}, {0.0, 0.3}};
  cfg.actuation0.profile = VelocityProfile::constant({0.0, 0.2});
  cfg.profile1 = VelocityProfile::constant({0.0, 0.3});
  cfg.filter.m = 60;
  cfg.filter.sigma_obs = {0.5, 0.5};
  return cfg;
}

}  // namespace

TEST_CASE("apply_sweep_value touches exactly the swept knob") {
  ScenarioConfig base = small_base();

  ScenarioConfig a = apply_sweep_value(base, SweepAxis::particle_count, 400.0,
                                       base.filter.estimator);
  CHECK(a.filter.m == 400);
  CHECK(a.filter.sigma_obs.x == base.filter.sigma_obs.x);

  ScenarioConfig b = apply_sweep_value(base, SweepAxis::sigma_obs, 1.5,
                                       base.filter.estimator);
  CHECK(b.filter.sigma_obs.x == 1.5);
  CHECK(b.filter.sigma_obs.y == 1.5);
  CHECK(b.filter.m == base.filter.m);

  ScenarioConfig c = apply_sweep_value(base, SweepAxis::sigma_dist, 0.1,
                                       base.filter.estimator);
  CHECK(c.noise.sigma[0] == 0.1);
  CHECK(c.noise.sigma[1] == 0.1);
  CHECK(c.noise.sigma[2] == 0.1);

  ScenarioConfig d = apply_sweep_value(base, SweepAxis::estimator, 0.0,
                                       EstimatorKind::ekf);
  CHECK(d.filter.estimator == EstimatorKind::ekf);

  CHECK_THROWS_AS(apply_sweep_value(base, SweepAxis::particle_count, 2.5,
                                    base.filter.estimator),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_sweep_value(base, SweepAxis::sigma_obs, 0.0,
                                    base.filter.estimator),
                  std::invalid_argument);
}

TEST_CASE("sweep runs carry paired seeds and per-run rmse") {
  SweepSpec spec;
  spec.base = small_base();
  spec.axis = SweepAxis::sigma_obs;
  spec.values = {0.3, 1.0};
  spec.repeats = 3;
  spec.skip_transient = 5;

  SweepResult res = run_sweep(spec);
  REQUIRE(res.runs.size() == 6);
  REQUIRE(res.aggregates.size() == 2);

  for (std::size_t vi = 0; vi < 2; ++vi) {
    for (int rep = 0; rep < 3; ++rep) {
      const SweepRun& run = res.runs[vi * 3 + static_cast<std::size_t>(rep)];
      CHECK(run.value == spec.values[vi]);
      CHECK(run.seed == spec.base.seed + static_cast<std::uint64_t>(rep));

      // Every run is reproducible from scratch through the public pieces.
      ScenarioConfig cfg = apply_sweep_value(spec.base, spec.axis, run.value,
                                             spec.base.filter.estimator);
      cfg.seed = run.seed;
      CHECK(run.rmse == rmse(run_scenario(cfg), spec.skip_transient));
    }
  }

  // Values are compared on identical seed sets.
  for (int rep = 0; rep < 3; ++rep)
    CHECK(res.runs[static_cast<std::size_t>(rep)].seed ==
          res.runs[3 + static_cast<std::size_t>(rep)].seed);
}

TEST_CASE("aggregates are the plain mean and unbiased std of their runs") {
  SweepSpec spec;
  spec.base = small_base();
  spec.axis = SweepAxis::particle_count;
  spec.values = {40.0, 80.0};
  spec.repeats = 4;
  spec.skip_transient = 5;

  SweepResult res = run_sweep(spec);
  REQUIRE(res.aggregates.size() == 2);
  for (std::size_t vi = 0; vi < 2; ++vi) {
    double sum = 0.0;
    for (int rep = 0; rep < 4; ++rep)
      sum += res.runs[vi * 4 + static_cast<std::size_t>(rep)].rmse;
    double mean = sum / 4.0;
    double ss = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
      double r = res.runs[vi * 4 + static_cast<std::size_t>(rep)].rmse;
      ss += (r - mean) * (r - mean);
    }
    const SweepAggregate& agg = res.aggregates[vi];
    CHECK(agg.mean == doctest::Approx(mean).epsilon(1e-12));
    CHECK(agg.stddev == doctest::Approx(std::sqrt(ss / 3.0)).epsilon(1e-12));
    CHECK(agg.n == 4);
    CHECK(agg.value == spec.values[vi]);
  }
}

TEST_CASE("sweep results do not depend on scheduling") {
  SweepSpec spec;
  spec.base = small_base();
  spec.axis = SweepAxis::estimator;
  spec.estimators = {EstimatorKind::dual_mcl, EstimatorKind::ekf};
  spec.repeats = 2;
  spec.skip_transient = 5;

  SweepResult a = run_sweep(spec);
  SweepResult b = run_sweep(spec);
  REQUIRE(a.runs.size() == b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    CHECK(a.runs[i].rmse == b.runs[i].rmse);
    CHECK(a.runs[i].label == b.runs[i].label);
  }
  CHECK(a.runs[0].label == "dual_mcl");
  CHECK(a.runs[2].label == "ekf");
}

TEST_CASE("sweep axis names round-trip") {
  for (SweepAxis axis : {SweepAxis::particle_count, SweepAxis::sigma_obs,
                         SweepAxis::sigma_dist, SweepAxis::estimator})
    CHECK(sweep_axis_from_name(sweep_axis_name(axis)) == axis);
  CHECK_THROWS_AS(sweep_axis_from_name("bandwidth"), std::invalid_argument);
}

TEST_CASE("sweep validation") {
  SweepSpec spec;
  spec.base = small_base();
  spec.axis = SweepAxis::sigma_obs;
  spec.values = {};
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec.values = {0.5};
  spec.repeats = 0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}
