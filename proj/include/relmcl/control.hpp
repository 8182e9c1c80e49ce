#pragma once

#include "relmcl/vec2.hpp"

namespace relmcl {

struct FormationGoal {
  Vec2 r_des;
  double k_v = 1.0;
  double deadzone = 0.2;
  Vec2 v_limit{2.0, 2.0};  // symmetric per-axis command limit
};

// Per-axis proportional command on the formation error e = r_hat - r_des:
// zero inside the dead-zone, clamp(k_v * e, +/- v_limit) outside. With
// r = p1 - p0 the anchor chases the tag, so r' = r - k_v (r - r_des) ts
// contracts toward r_des.
Vec2 formation_control(const Vec2& r_hat, const FormationGoal& goal);

}  // namespace relmcl
