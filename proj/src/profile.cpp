#include "relmcl/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace relmcl {

VelocityProfile VelocityProfile::constant(const Vec2& v) {
  VelocityProfile p;
  p.kind = Kind::constant;
  p.v = v;
  return p;
}

VelocityProfile VelocityProfile::square_wave(double amp, double period_s, int axis,
                                             const Vec2& base) {
  VelocityProfile p;
  p.kind = Kind::square_wave;
  p.amp = amp;
  p.period_s = period_s;
  p.axis = axis;
  p.base = base;
  return p;
}

VelocityProfile VelocityProfile::piecewise(std::vector<PiecewisePoint> points) {
  VelocityProfile p;
  p.kind = Kind::piecewise;
  p.points = std::move(points);
  return p;
}

void validate_profile(const VelocityProfile& p) {
  switch (p.kind) {
    case VelocityProfile::Kind::constant:
      break;
    case VelocityProfile::Kind::square_wave:
      if (p.period_s <= 0.0) throw std::invalid_argument("square_wave period must be positive");
      if (p.axis != 0 && p.axis != 1) throw std::invalid_argument("square_wave axis must be 0 or 1");
      break;
    case VelocityProfile::Kind::piecewise:
      if (p.points.empty()) throw std::invalid_argument("piecewise profile needs points");
      if (p.points.front().t != 0.0)
        throw std::invalid_argument("piecewise profile must start at t = 0");
      for (std::size_t i = 1; i < p.points.size(); ++i)
        if (p.points[i].t <= p.points[i - 1].t)
          throw std::invalid_argument("piecewise times must be strictly increasing");
      break;
  }
}

Vec2 profile_velocity(const VelocityProfile& p, double t) {
  switch (p.kind) {
    case VelocityProfile::Kind::constant:
      return p.v;
    case VelocityProfile::Kind::square_wave: {
      if (p.period_s <= 0.0) throw std::invalid_argument("square_wave period must be positive");
      auto half = static_cast<long long>(std::floor(t / p.period_s));
      double sign = (half % 2 == 0) ? 1.0 : -1.0;
      Vec2 out = p.base;
      if (p.axis == 0)
        out.x += sign * p.amp;
      else
        out.y += sign * p.amp;
      return out;
    }
    case VelocityProfile::Kind::piecewise: {
      if (p.points.empty()) throw std::invalid_argument("piecewise profile needs points");
      Vec2 out = p.points.front().v;
      for (const auto& pt : p.points) {
        if (pt.t <= t) out = pt.v;
        else break;
      }
      return out;
    }
  }
  return {0.0, 0.0};
}

}  // namespace relmcl
