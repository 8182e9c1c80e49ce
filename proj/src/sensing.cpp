#include "relmcl/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relmcl {

RangeTriple corrupt_ranges(const RangeTriple& truth, const RangeNoiseModel& noise,
                           Rng& rng) {
  for (int i = 0; i < 3; ++i) {
    if (noise.sigma[i] < 0.0)
      throw std::invalid_argument("range noise sigma must be nonnegative");
  }
  RangeTriple out;
  out.d1 = std::max(0.0, truth.d1 + noise.bias[0] + rng.normal(0.0, noise.sigma[0]));
  out.d2 = std::max(0.0, truth.d2 + noise.bias[1] + rng.normal(0.0, noise.sigma[1]));
  out.d3 = std::max(0.0, truth.d3 + noise.bias[2] + rng.normal(0.0, noise.sigma[2]));
  return out;
}

RangeNoiseModel calibrate(const std::vector<CalibrationSample>& samples) {
  std::array<std::vector<double>, 3> residuals;
  for (const auto& s : samples) {
    if (s.anchor_id < 1 || s.anchor_id > 3)
      throw std::invalid_argument("anchor_id must be 1, 2, or 3; got " +
                                  std::to_string(s.anchor_id));
    residuals[s.anchor_id - 1].push_back(s.measured_m - s.truth_m);
  }
  RangeNoiseModel model;
  for (int i = 0; i < 3; ++i) {
    const auto& r = residuals[i];
    if (r.size() < 2)
      throw std::invalid_argument("anchor " + std::to_string(i + 1) +
                                  " needs at least two calibration samples");
    double mean = 0.0;
    for (double v : r) mean += v;
    mean /= static_cast<double>(r.size());
    double ss = 0.0;
    for (double v : r) ss += (v - mean) * (v - mean);
    model.bias[i] = mean;
    model.sigma[i] = std::sqrt(ss / static_cast<double>(r.size() - 1));
  }
  return model;
}

}  // namespace relmcl
