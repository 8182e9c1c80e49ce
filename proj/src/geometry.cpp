#include "relmcl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relmcl {

RangeTriple true_ranges(const Vec2& r, const AnchorLayout& layout) {
  if (layout.a <= 0.0) throw std::invalid_argument("anchor spacing a must be positive");
  auto q = layout.anchors();
  return {norm(r - q[0]), norm(r - q[1]), norm(r - q[2])};
}

double triangle_area(double u, double v, double w, bool* clamped) {
  // Kahan's numerically stable form; needs u >= v >= w.
  if (u < v) std::swap(u, v);
  if (v < w) std::swap(v, w);
  if (u < v) std::swap(u, v);
  double t = (u + (v + w)) * (w - (u - v)) * (w + (u - v)) * (u + (v - w));
  if (t < 0.0) {
    t = 0.0;
    if (clamped) *clamped = true;
  }
  return 0.25 * std::sqrt(t);
}

ConstructedMeasurement construct_measurement(const RangeTriple& d,
                                             const AnchorLayout& layout) {
  double a = layout.a;
  if (a <= 0.0) throw std::invalid_argument("anchor spacing a must be positive");
  if (d.d1 < 0.0 || d.d2 < 0.0 || d.d3 < 0.0)
    throw std::invalid_argument("ranges must be nonnegative");

  ConstructedMeasurement out;
  // Sub-triangle opposite q1 has sides (d2, d3, a) and fixes |x|; the one
  // opposite q3 has sides (d2, d1, a) and fixes |y|.
  double area1 = triangle_area(d.d2, d.d3, a, &out.degenerate1);
  double area3 = triangle_area(d.d2, d.d1, a, &out.degenerate3);

  double s1 = (d.d2 * d.d2 + a * a - d.d1 * d.d1) >= 0.0 ? 1.0 : -1.0;
  double s3 = (d.d2 * d.d2 + a * a - d.d3 * d.d3) >= 0.0 ? 1.0 : -1.0;

  out.lambda1 = s1 * 2.0 * area1 / (a * a);
  out.lambda3 = s3 * 2.0 * area3 / (a * a);
  out.r_meas = {out.lambda1 * a, out.lambda3 * a};
  return out;
}

}  // namespace relmcl
