#pragma once

#include <algorithm>
#include <cmath>

namespace relmcl {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(double s, Vec2 a) { return a *= s; }
inline Vec2 operator*(Vec2 a, double s) { return a *= s; }
inline bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double norm_sq(const Vec2& a) { return a.x * a.x + a.y * a.y; }

inline Vec2 clamp(const Vec2& v, const Vec2& lo, const Vec2& hi) {
  return {std::clamp(v.x, lo.x, hi.x), std::clamp(v.y, lo.y, hi.y)};
}

inline bool finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

// Axis-aligned box; lo == hi degenerates to a point.
struct Box2 {
  Vec2 lo;
  Vec2 hi;

  bool valid() const { return lo.x <= hi.x && lo.y <= hi.y; }
  Vec2 center() const { return {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)}; }
  Vec2 extent() const { return {hi.x - lo.x, hi.y - lo.y}; }
};

}  // namespace relmcl
