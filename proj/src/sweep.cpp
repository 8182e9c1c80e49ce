#include "relmcl/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "relmcl/metrics.hpp"

namespace relmcl {

const char* sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::particle_count: return "particle_count";
    case SweepAxis::sigma_obs: return "sigma_obs";
    case SweepAxis::sigma_dist: return "sigma_dist";
    case SweepAxis::estimator: return "estimator";
  }
  return "?";
}

SweepAxis sweep_axis_from_name(const std::string& name) {
  if (name == "particle_count") return SweepAxis::particle_count;
  if (name == "sigma_obs") return SweepAxis::sigma_obs;
  if (name == "sigma_dist") return SweepAxis::sigma_dist;
  if (name == "estimator") return SweepAxis::estimator;
  throw std::invalid_argument("unknown sweep axis '" + name + "'");
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepAxis axis,
                                 double value, EstimatorKind estimator) {
  ScenarioConfig cfg = base;
  switch (axis) {
    case SweepAxis::particle_count: {
      int m = static_cast<int>(value);
      if (m < 1 || static_cast<double>(m) != value)
        throw std::invalid_argument("particle_count values must be positive integers");
      cfg.filter.m = m;
      break;
    }
    case SweepAxis::sigma_obs:
      if (value <= 0.0) throw std::invalid_argument("sigma_obs values must be positive");
      cfg.filter.sigma_obs = {value, value};
      break;
    case SweepAxis::sigma_dist:
      if (value < 0.0) throw std::invalid_argument("sigma_dist values must be nonnegative");
      cfg.noise.sigma = {value, value, value};
      break;
    case SweepAxis::estimator:
      cfg.filter.estimator = estimator;
      break;
  }
  return cfg;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.repeats < 1) throw std::invalid_argument("sweep repeats must be at least 1");
  std::size_t n_values = spec.axis == SweepAxis::estimator ? spec.estimators.size()
                                                           : spec.values.size();
  if (n_values == 0) throw std::invalid_argument("sweep has no values");

  auto label_of = [&](std::size_t vi) -> std::string {
    if (spec.axis == SweepAxis::estimator) return estimator_name(spec.estimators[vi]);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", spec.values[vi]);
    return buf;
  };

  // Build and validate every run config up front so configuration errors
  // surface before the parallel region (exceptions must not cross it).
  std::size_t total = n_values * static_cast<std::size_t>(spec.repeats);
  std::vector<ScenarioConfig> configs;
  configs.reserve(total);
  for (std::size_t vi = 0; vi < n_values; ++vi) {
    double value = spec.axis == SweepAxis::estimator ? static_cast<double>(vi)
                                                     : spec.values[vi];
    EstimatorKind est = spec.axis == SweepAxis::estimator ? spec.estimators[vi]
                                                          : spec.base.filter.estimator;
    for (int rep = 0; rep < spec.repeats; ++rep) {
      ScenarioConfig cfg = apply_sweep_value(spec.base, spec.axis, value, est);
      cfg.seed = spec.base.seed + static_cast<std::uint64_t>(rep);
      validate_scenario(cfg);
      configs.push_back(std::move(cfg));
    }
  }

  SweepResult result;
  result.runs.resize(total);
  std::vector<std::string> errors(total);

  const auto n_runs = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < n_runs; ++idx) {
    auto i = static_cast<std::size_t>(idx);
    auto vi = i / static_cast<std::size_t>(spec.repeats);
    try {
      ScenarioTrace trace = run_scenario(configs[i]);
      SweepRun& run = result.runs[i];
      run.label = label_of(vi);
      run.value = spec.axis == SweepAxis::estimator ? static_cast<double>(vi)
                                                    : spec.values[vi];
      run.seed = configs[i].seed;
      run.rmse = rmse(trace, spec.skip_transient);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error("sweep run failed: " + e);

  for (std::size_t vi = 0; vi < n_values; ++vi) {
    SweepAggregate agg;
    agg.label = label_of(vi);
    agg.n = spec.repeats;
    double sum = 0.0;
    for (int rep = 0; rep < spec.repeats; ++rep) {
      const SweepRun& run = result.runs[vi * static_cast<std::size_t>(spec.repeats) +
                                        static_cast<std::size_t>(rep)];
      agg.value = run.value;
      sum += run.rmse;
    }
    agg.mean = sum / static_cast<double>(spec.repeats);
    double ss = 0.0;
    for (int rep = 0; rep < spec.repeats; ++rep) {
      double r = result.runs[vi * static_cast<std::size_t>(spec.repeats) +
                             static_cast<std::size_t>(rep)]
                     .rmse;
      ss += (r - agg.mean) * (r - agg.mean);
    }
    agg.stddev = spec.repeats > 1
                     ? std::sqrt(ss / static_cast<double>(spec.repeats - 1))
                     : 0.0;
    result.aggregates.push_back(agg);
  }
  return result;
}

}  // namespace relmcl
