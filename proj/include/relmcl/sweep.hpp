#pragma once

#include <string>
#include <vector>

#include "relmcl/scenario.hpp"

namespace relmcl {

enum class SweepAxis { particle_count, sigma_obs, sigma_dist, estimator };

const char* sweep_axis_name(SweepAxis axis);
SweepAxis sweep_axis_from_name(const std::string& name);

// One swept parameter with repeated runs per value. Numeric axes use
// `values`; the estimator axis uses `estimators`. Run j of every value gets
// seed base.seed + j, so values are compared on paired seeds.
struct SweepSpec {
  ScenarioConfig base;
  SweepAxis axis = SweepAxis::sigma_obs;
  std::vector<double> values;
  std::vector<EstimatorKind> estimators;
  int repeats = 5;
  int skip_transient = 10;
};

struct SweepRun {
  std::string label;   // value rendered as text (estimator name for that axis)
  double value = 0.0;  // numeric value; index for the estimator axis
  std::uint64_t seed = 0;
  double rmse = 0.0;
};

struct SweepAggregate {
  std::string label;
  double value = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // unbiased sample std over repeats
  int n = 0;
};

struct SweepResult {
  std::vector<SweepRun> runs;
  std::vector<SweepAggregate> aggregates;
};

// Applies one swept value to a copy of the base config.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepAxis axis,
                                 double value, EstimatorKind estimator);

// Runs repeats x values scenarios; runs are independent and parallelized,
// with results stored by slot so the output does not depend on scheduling.
SweepResult run_sweep(const SweepSpec& spec);

}  // namespace relmcl
