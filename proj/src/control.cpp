#include "relmcl/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relmcl {

Vec2 formation_control(const Vec2& r_hat, const FormationGoal& goal) {
  if (goal.k_v <= 0.0) throw std::invalid_argument("k_v must be positive");
  if (goal.deadzone < 0.0) throw std::invalid_argument("deadzone must be nonnegative");
  if (goal.v_limit.x <= 0.0 || goal.v_limit.y <= 0.0)
    throw std::invalid_argument("v_limit must be positive");

  Vec2 e = r_hat - goal.r_des;
  auto axis = [&](double err, double vmax) {
    if (std::abs(err) <= goal.deadzone) return 0.0;
    return std::clamp(goal.k_v * err, -vmax, vmax);
  };
  return {axis(e.x, goal.v_limit.x), axis(e.y, goal.v_limit.y)};
}

}  // namespace relmcl
