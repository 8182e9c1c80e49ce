#pragma once

#include "relmcl/rng.hpp"
#include "relmcl/vec2.hpp"

namespace relmcl {

struct RobotLimits {
  Vec2 v_min{-2.0, -2.0};
  Vec2 v_max{2.0, 2.0};
  Vec2 a_min{-4.0, -4.0};
  Vec2 a_max{4.0, 4.0};
};

struct RobotState {
  Vec2 p;
  Vec2 v;
};

// Discrete double integrator. The acceleration command is clamped first and
// the clamped value drives both position and velocity; process noise
// delta ~ N(0, diag(sigma_mot^2)) enters the velocity only, then the velocity
// is clamped to its limits.
RobotState step_robot(const RobotState& s, const Vec2& accel_cmd,
                      const RobotLimits& lim, const Vec2& sigma_mot, double ts,
                      Rng& rng);

// Deadbeat tracking: acceleration that reaches v_des in one step, clamped to
// the acceleration limits.
Vec2 velocity_tracking_accel(const Vec2& v, const Vec2& v_des, double ts,
                             const RobotLimits& lim);

// Relative kinematics of the tag seen from the anchor robot:
// r' = r + (v1 - v0) ts + 0.5 (a1 - a0) ts^2.
Vec2 relative_dynamics(const Vec2& r, const Vec2& v0, const Vec2& v1,
                       const Vec2& a0, const Vec2& a1, double ts);

}  // namespace relmcl
