#include "relmcl/standard_pf.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "relmcl/motion.hpp"

namespace relmcl {

namespace {

double range_likelihood(const Vec2& x, const RangeTriple& d,
                        const std::array<double, 3>& sigma,
                        const std::array<Vec2, 3>& anchors) {
  double w = 1.0;
  for (int j = 0; j < 3; ++j) {
    double predicted = norm(x - anchors[static_cast<std::size_t>(j)]);
    double s = sigma[static_cast<std::size_t>(j)];
    double u = (d[j] - predicted) / s;
    w *= std::exp(-0.5 * u * u) / (s * std::sqrt(2.0 * std::numbers::pi));
  }
  return w;
}

void check_sigma(const std::array<double, 3>& sigma) {
  for (double s : sigma) {
    if (s <= 0.0) throw std::invalid_argument("range likelihood sigma must be positive");
  }
}

}  // namespace

std::vector<double> range_likelihood_weights(const std::vector<Vec2>& positions,
                                             const RangeTriple& d,
                                             const std::array<double, 3>& sigma,
                                             const AnchorLayout& layout) {
  check_sigma(sigma);
  auto anchors = layout.anchors();
  std::vector<double> out(positions.size());
  const auto n = static_cast<std::int64_t>(positions.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out[idx] = range_likelihood(positions[idx], d, sigma, anchors);
  }
  return out;
}

std::vector<double> range_likelihood_weights_serial(
    const std::vector<Vec2>& positions, const RangeTriple& d,
    const std::array<double, 3>& sigma, const AnchorLayout& layout) {
  check_sigma(sigma);
  auto anchors = layout.anchors();
  std::vector<double> out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    out[i] = range_likelihood(positions[i], d, sigma, anchors);
  return out;
}

FilterEstimate standard_pf_step(FilterState& state, const RangeTriple& ranges,
                                const Vec2& v0, const StandardPfConfig& cfg,
                                Rng& rng) {
  if (state.particles.ps.empty()) throw std::invalid_argument("filter not initialized");

  std::size_t m = state.particles.ps.size();
  std::vector<Vec2> vels(m);
  for (std::size_t i = 0; i < m; ++i) {
    vels[i] = rng.normal2(state.v1_hat, cfg.sigma_mot);
    state.particles.ps[i].x = relative_dynamics(state.particles.ps[i].x, v0, vels[i],
                                                {0.0, 0.0}, {0.0, 0.0}, cfg.ts);
  }

  std::vector<double> w = range_likelihood_weights(state.particles.positions(),
                                                   ranges, cfg.sigma_range, cfg.layout);
  normalize_weights(w);

  Vec2 v1_new{0.0, 0.0};
  for (std::size_t i = 0; i < m; ++i) v1_new += w[i] * vels[i];

  for (std::size_t i = 0; i < m; ++i) state.particles.ps[i].w = w[i];
  ParticleSet resampled = low_variance_resample(state.particles, rng);
  resampled.step = state.particles.step + 1;

  FilterEstimate est;
  est.r_hat = estimate_from_particles(resampled);
  est.v1_hat = v1_new;

  state.particles = std::move(resampled);
  state.v1_hat = v1_new;
  return est;
}

}  // namespace relmcl
