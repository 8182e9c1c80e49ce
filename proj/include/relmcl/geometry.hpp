#pragma once

#include <array>

#include "relmcl/vec2.hpp"

namespace relmcl {

// Right-angle UWB anchor layout on robot R0, expressed in R0's frame:
// q1 = [a, 0], q2 = [0, 0], q3 = [0, a].
struct AnchorLayout {
  double a = 1.0;

  std::array<Vec2, 3> anchors() const {
    return {Vec2{a, 0.0}, Vec2{0.0, 0.0}, Vec2{0.0, a}};
  }
};

struct RangeTriple {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  double operator[](int i) const { return i == 0 ? d1 : (i == 1 ? d2 : d3); }
};

// Position fix built from one range triple. lambda1/lambda3 are the signed
// barycentric weights of q1 and q3; r_meas = [lambda1 * a, lambda3 * a].
// degenerate1/degenerate3 flag a sub-triangle whose squared area had to be
// clamped to zero because noise broke the triangle inequality.
struct ConstructedMeasurement {
  Vec2 r_meas;
  double lambda1 = 0.0;
  double lambda3 = 0.0;
  bool degenerate1 = false;
  bool degenerate3 = false;
};

// Noise-free ranges from the tag at relative position r to the three anchors.
RangeTriple true_ranges(const Vec2& r, const AnchorLayout& layout);

// Area of a triangle from its three side lengths. Clamps the radicand to
// zero when the sides violate the triangle inequality and reports it.
double triangle_area(double u, double v, double w, bool* clamped = nullptr);

// Maps a range triple to a planar position via signed sub-area ratios.
ConstructedMeasurement construct_measurement(const RangeTriple& d,
                                             const AnchorLayout& layout);

}  // namespace relmcl
