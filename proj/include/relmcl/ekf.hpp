#pragma once

#include <array>

#include "relmcl/dual_mcl.hpp"
#include "relmcl/geometry.hpp"
#include "relmcl/vec2.hpp"

namespace relmcl {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

// State [r_x, r_y, v1_x, v1_y]: relative position plus global tag velocity.
struct EkfState {
  Vec4 mean{0.0, 0.0, 0.0, 0.0};
  Mat4 cov{};
  int step = 0;
};

struct EkfConfig {
  std::array<double, 4> process_sigma{0.01, 0.01, 0.5, 0.5};
  std::array<double, 3> meas_sigma{0.05, 0.05, 0.05};
  double ts = 0.1;
  AnchorLayout layout;
};

// Mean at the region center with zero velocity; position variances from the
// box extents (uniform moments), velocity variances from v_sigma.
EkfState init_ekf(const Box2& init_region, const Vec2& v_sigma);

// 3x4 measurement Jacobian: row i is [(r - q_i)^T / |r - q_i|, 0, 0].
std::array<std::array<double, 4>, 3> range_jacobian(const Vec2& r,
                                                    const AnchorLayout& layout);

// Constant-velocity predict plus sequential scalar range updates in
// Joseph form. A range whose predicted distance falls under 1e-6 is skipped.
FilterEstimate ekf_step(EkfState& state, const RangeTriple& ranges, const Vec2& v0,
                        const EkfConfig& cfg);

}  // namespace relmcl
