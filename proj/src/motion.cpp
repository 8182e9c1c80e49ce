#include "relmcl/motion.hpp"

#include <stdexcept>

namespace relmcl {

RobotState step_robot(const RobotState& s, const Vec2& accel_cmd,
                      const RobotLimits& lim, const Vec2& sigma_mot, double ts,
                      Rng& rng) {
  if (ts <= 0.0) throw std::invalid_argument("ts must be positive");
  if (sigma_mot.x < 0.0 || sigma_mot.y < 0.0)
    throw std::invalid_argument("process noise sigma must be nonnegative");
  Vec2 a = clamp(accel_cmd, lim.a_min, lim.a_max);
  RobotState out;
  out.p = s.p + ts * s.v + (0.5 * ts * ts) * a;
  Vec2 delta = rng.normal2({0.0, 0.0}, sigma_mot);
  out.v = clamp(s.v + ts * a + delta, lim.v_min, lim.v_max);
  return out;
}

Vec2 velocity_tracking_accel(const Vec2& v, const Vec2& v_des, double ts,
                             const RobotLimits& lim) {
  if (ts <= 0.0) throw std::invalid_argument("ts must be positive");
  Vec2 a = (1.0 / ts) * (v_des - v);
  return clamp(a, lim.a_min, lim.a_max);
}

Vec2 relative_dynamics(const Vec2& r, const Vec2& v0, const Vec2& v1,
                       const Vec2& a0, const Vec2& a1, double ts) {
  if (ts <= 0.0) throw std::invalid_argument("ts must be positive");
  return r + ts * (v1 - v0) + (0.5 * ts * ts) * (a1 - a0);
}

}  // namespace relmcl
