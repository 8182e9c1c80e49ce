#pragma once

#include <cstdint>
#include <random>

#include "relmcl/vec2.hpp"

namespace relmcl {

// Single random source per run. Every stochastic operation draws from one
// instance in a fixed order, which is what makes traces reproducible from
// (config, seed) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal(double mean, double sigma) {
    if (sigma <= 0.0) return mean;
    std::normal_distribution<double> d(mean, sigma);
    return d(gen_);
  }

  double uniform(double lo, double hi) {
    if (hi <= lo) return lo;
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen_);
  }

  // Independent per-axis draws, x first.
  Vec2 normal2(const Vec2& mean, const Vec2& sigma) {
    double x = normal(mean.x, sigma.x);
    double y = normal(mean.y, sigma.y);
    return {x, y};
  }

  Vec2 uniform2(const Vec2& lo, const Vec2& hi) {
    double x = uniform(lo.x, hi.x);
    double y = uniform(lo.y, hi.y);
    return {x, y};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace relmcl
