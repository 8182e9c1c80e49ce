#pragma once

#include <array>
#include <vector>

#include "relmcl/geometry.hpp"
#include "relmcl/rng.hpp"

namespace relmcl {

// Per-anchor additive bias and Gaussian noise std on the measured ranges.
struct RangeNoiseModel {
  std::array<double, 3> bias{0.0, 0.0, 0.0};
  std::array<double, 3> sigma{0.0, 0.0, 0.0};
};

// One calibration pair for a given anchor.
struct CalibrationSample {
  int anchor_id = 0;  // 1..3
  double measured_m = 0.0;
  double truth_m = 0.0;
};

// d_i = max(0, truth_i + bias_i + eta_i), eta_i ~ N(0, sigma_i^2),
// drawn in anchor order 1, 2, 3.
RangeTriple corrupt_ranges(const RangeTriple& truth, const RangeNoiseModel& noise,
                           Rng& rng);

// Per-anchor bias = mean(measured - truth), sigma = unbiased sample std of
// the residuals. Needs at least two samples per anchor.
RangeNoiseModel calibrate(const std::vector<CalibrationSample>& samples);

}  // namespace relmcl
