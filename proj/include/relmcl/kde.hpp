#pragma once

#include <vector>

#include "relmcl/vec2.hpp"

namespace relmcl {

// Product-Gaussian kernel density over a set of centers with per-axis
// bandwidths. evaluate() parallelizes over query points with OpenMP;
// evaluate_serial() is the reference implementation kept for testing. Both
// share the same per-query kernel with a serial inner sum, so their results
// are bit-identical at any thread count.
class KernelDensity2D {
 public:
  KernelDensity2D(std::vector<Vec2> centers, const Vec2& bandwidth);

  double evaluate_at(const Vec2& q) const;
  std::vector<double> evaluate(const std::vector<Vec2>& queries) const;
  std::vector<double> evaluate_serial(const std::vector<Vec2>& queries) const;

  const Vec2& bandwidth() const { return h_; }
  const std::vector<Vec2>& centers() const { return centers_; }

  // Per-axis rule-of-thumb bandwidth sigma_axis * n^(-1/6) for planar data,
  // floored so a collapsed cloud still yields a usable kernel.
  static Vec2 scott_bandwidth(const std::vector<Vec2>& centers);

 private:
  std::vector<Vec2> centers_;
  Vec2 h_;
};

}  // namespace relmcl
