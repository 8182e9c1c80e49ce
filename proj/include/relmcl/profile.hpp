#pragma once

#include <vector>

#include "relmcl/vec2.hpp"

namespace relmcl {

struct PiecewisePoint {
  double t = 0.0;
  Vec2 v;
};

// Commanded velocity as a function of time. square_wave adds +/-amp on one
// axis to a base vector, flipping sign every period_s seconds (positive
// phase first); piecewise holds the latest value whose start time has passed.
struct VelocityProfile {
  enum class Kind { constant, square_wave, piecewise };

  Kind kind = Kind::constant;
  Vec2 v{0.0, 0.0};        // constant
  double amp = 0.0;        // square_wave
  double period_s = 1.0;   // square_wave
  int axis = 0;            // square_wave: 0 = x, 1 = y
  Vec2 base{0.0, 0.0};     // square_wave
  std::vector<PiecewisePoint> points;  // piecewise

  static VelocityProfile constant(const Vec2& v);
  static VelocityProfile square_wave(double amp, double period_s, int axis,
                                     const Vec2& base = {0.0, 0.0});
  static VelocityProfile piecewise(std::vector<PiecewisePoint> points);
};

void validate_profile(const VelocityProfile& p);

Vec2 profile_velocity(const VelocityProfile& p, double t);

}  // namespace relmcl
