#include "relmcl/particles.hpp"

#include <cmath>
#include <stdexcept>

namespace relmcl {

std::vector<Vec2> ParticleSet::positions() const {
  std::vector<Vec2> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.x);
  return out;
}

ParticleSet init_particles(const Box2& region, int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("particle count must be at least 1");
  if (!region.valid()) throw std::invalid_argument("init region is empty (lo > hi)");
  ParticleSet set;
  set.ps.resize(static_cast<std::size_t>(m));
  double w = 1.0 / static_cast<double>(m);
  for (auto& p : set.ps) {
    p.x = rng.uniform2(region.lo, region.hi);
    p.w = w;
  }
  return set;
}

bool normalize_weights(std::vector<double>& w) {
  if (w.empty()) throw std::invalid_argument("empty weight vector");
  double sum = 0.0;
  bool bad = false;
  for (double v : w) {
    if (!std::isfinite(v) || v < 0.0) {
      bad = true;
      break;
    }
    sum += v;
  }
  if (bad || !std::isfinite(sum) || sum <= 0.0) {
    double u = 1.0 / static_cast<double>(w.size());
    for (double& v : w) v = u;
    return true;
  }
  for (double& v : w) v /= sum;
  return false;
}

Vec2 estimate_from_particles(const ParticleSet& set) {
  if (set.ps.empty()) throw std::invalid_argument("empty particle set");
  Vec2 mean{0.0, 0.0};
  for (const auto& p : set.ps) mean += p.w * p.x;
  return mean;
}

ParticleSet low_variance_resample(const ParticleSet& set, Rng& rng) {
  std::size_t m = set.ps.size();
  if (m == 0) throw std::invalid_argument("empty particle set");
  double sum = 0.0;
  for (const auto& p : set.ps) sum += p.w;
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("resampling expects normalized weights");

  ParticleSet out;
  out.step = set.step;
  out.ps.resize(m);
  double inv_m = 1.0 / static_cast<double>(m);
  double u0 = rng.uniform(0.0, inv_m);
  double c = set.ps[0].w;
  std::size_t i = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double u = u0 + static_cast<double>(j) * inv_m;
    while (u > c && i + 1 < m) {
      ++i;
      c += set.ps[i].w;
    }
    out.ps[j] = {set.ps[i].x, inv_m};
  }
  return out;
}

}  // namespace relmcl
