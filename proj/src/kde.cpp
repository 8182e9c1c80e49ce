#include "relmcl/kde.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace relmcl {

namespace {
constexpr double kMinBandwidth = 1e-6;
}

KernelDensity2D::KernelDensity2D(std::vector<Vec2> centers, const Vec2& bandwidth)
    : centers_(std::move(centers)), h_(bandwidth) {
  if (centers_.empty()) throw std::invalid_argument("KDE needs at least one center");
  if (h_.x <= 0.0 || h_.y <= 0.0)
    throw std::invalid_argument("KDE bandwidth must be positive");
}

double KernelDensity2D::evaluate_at(const Vec2& q) const {
  double sum = 0.0;
  for (const auto& c : centers_) {
    double ux = (q.x - c.x) / h_.x;
    double uy = (q.y - c.y) / h_.y;
    sum += std::exp(-0.5 * (ux * ux + uy * uy));
  }
  double norm = 2.0 * std::numbers::pi * h_.x * h_.y *
                static_cast<double>(centers_.size());
  return sum / norm;
}

std::vector<double> KernelDensity2D::evaluate(const std::vector<Vec2>& queries) const {
  std::vector<double> out(queries.size());
  const auto n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_at(queries[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<double> KernelDensity2D::evaluate_serial(
    const std::vector<Vec2>& queries) const {
  std::vector<double> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) out[i] = evaluate_at(queries[i]);
  return out;
}

Vec2 KernelDensity2D::scott_bandwidth(const std::vector<Vec2>& centers) {
  std::size_t n = centers.size();
  if (n == 0) throw std::invalid_argument("KDE needs at least one center");
  Vec2 mean{0.0, 0.0};
  for (const auto& c : centers) mean += c;
  mean *= 1.0 / static_cast<double>(n);
  Vec2 ss{0.0, 0.0};
  for (const auto& c : centers) {
    ss.x += (c.x - mean.x) * (c.x - mean.x);
    ss.y += (c.y - mean.y) * (c.y - mean.y);
  }
  Vec2 sd{0.0, 0.0};
  if (n > 1) {
    sd.x = std::sqrt(ss.x / static_cast<double>(n - 1));
    sd.y = std::sqrt(ss.y / static_cast<double>(n - 1));
  }
  double scale = std::pow(static_cast<double>(n), -1.0 / 6.0);
  return {std::max(sd.x * scale, kMinBandwidth), std::max(sd.y * scale, kMinBandwidth)};
}

}  // namespace relmcl
