#pragma once

#include <array>
#include <vector>

#include "relmcl/dual_mcl.hpp"
#include "relmcl/geometry.hpp"
#include "relmcl/particles.hpp"

namespace relmcl {

struct StandardPfConfig {
  int m = 200;
  Vec2 sigma_mot{0.7071067811865476, 0.7071067811865476};
  std::array<double, 3> sigma_range{0.05, 0.05, 0.05};
  double ts = 0.1;
  AnchorLayout layout;
};

// Raw per-particle likelihoods prod_j N(d_j; |x_i - q_j|, sigma_j^2).
// OpenMP over particles; the _serial variant is the reference for tests.
std::vector<double> range_likelihood_weights(const std::vector<Vec2>& positions,
                                             const RangeTriple& d,
                                             const std::array<double, 3>& sigma,
                                             const AnchorLayout& layout);
std::vector<double> range_likelihood_weights_serial(
    const std::vector<Vec2>& positions, const RangeTriple& d,
    const std::array<double, 3>& sigma, const AnchorLayout& layout);

// Conventional bootstrap update on the relative state: propagate with
// sampled tag velocities, weight by range likelihoods, resample.
FilterEstimate standard_pf_step(FilterState& state, const RangeTriple& ranges,
                                const Vec2& v0, const StandardPfConfig& cfg,
                                Rng& rng);

}  // namespace relmcl
