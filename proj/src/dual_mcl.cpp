#include "relmcl/dual_mcl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relmcl {

namespace {

double normal_pdf(double x, double mean, double sigma) {
  double s = std::max(sigma, 1e-12);
  double u = (x - mean) / s;
  return std::exp(-0.5 * u * u) / (s * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace

FilterState init_filter(const Box2& init_region, int m, Rng& rng) {
  FilterState st;
  st.particles = init_particles(init_region, m, rng);
  st.v1_hat = {0.0, 0.0};
  return st;
}

ParticleSet sample_proposal(const Vec2& r_meas, const Vec2& sigma_obs, int m,
                            Rng& rng) {
  if (m < 1) throw std::invalid_argument("particle count must be at least 1");
  if (sigma_obs.x < 0.0 || sigma_obs.y < 0.0)
    throw std::invalid_argument("sigma_obs must be nonnegative");
  ParticleSet set;
  set.ps.resize(static_cast<std::size_t>(m));
  double w = 1.0 / static_cast<double>(m);
  for (auto& p : set.ps) {
    p.x = rng.normal2(r_meas, sigma_obs);
    p.w = w;
  }
  return set;
}

std::vector<Vec2> sample_velocities(const Vec2& v1_hat_prev, const Vec2& sigma_mot,
                                    int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("particle count must be at least 1");
  if (sigma_mot.x < 0.0 || sigma_mot.y < 0.0)
    throw std::invalid_argument("sigma_mot must be nonnegative");
  std::vector<Vec2> out(static_cast<std::size_t>(m));
  for (auto& v : out) v = rng.normal2(v1_hat_prev, sigma_mot);
  return out;
}

std::vector<Vec2> auxiliary_positions(const Vec2& r_avg,
                                      const std::vector<Vec2>& velocities,
                                      double ts) {
  if (ts <= 0.0) throw std::invalid_argument("ts must be positive");
  std::vector<Vec2> out;
  out.reserve(velocities.size());
  for (const auto& v : velocities) out.push_back(r_avg + ts * v);
  return out;
}

KernelDensity2D find_density(const ParticleSet& prev, const Vec2& v0,
                             const Vec2& v1_hat_prev, const Vec2& sigma_mot,
                             double ts, const BandwidthRule& bw, Rng& rng) {
  if (prev.ps.empty()) throw std::invalid_argument("empty particle set");
  if (ts <= 0.0) throw std::invalid_argument("ts must be positive");
  std::vector<Vec2> propagated;
  propagated.reserve(prev.ps.size());
  for (const auto& p : prev.ps) {
    Vec2 v = rng.normal2(v1_hat_prev, sigma_mot);
    propagated.push_back(p.x + ts * (v - v0));
  }
  Vec2 h;
  if (bw.kind == BandwidthKind::fixed) {
    if (bw.fixed_h <= 0.0) throw std::invalid_argument("fixed bandwidth must be positive");
    h = {bw.fixed_h, bw.fixed_h};
  } else {
    h = KernelDensity2D::scott_bandwidth(propagated);
  }
  return KernelDensity2D(std::move(propagated), h);
}

std::vector<double> importance_weights(const ParticleSet& particles,
                                       const KernelDensity2D& density,
                                       const std::vector<Vec2>& aux,
                                       const Vec2& r_meas, const Vec2& sigma_obs) {
  if (particles.ps.size() != aux.size())
    throw std::invalid_argument("particle and auxiliary counts differ");
  std::vector<double> w = density.evaluate(particles.positions());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] *= normal_pdf(aux[i].x, r_meas.x, sigma_obs.x) *
            normal_pdf(aux[i].y, r_meas.y, sigma_obs.y);
  }
  normalize_weights(w);
  return w;
}

FilterEstimate dual_mcl_step(FilterState& state, const RangeTriple& ranges,
                             const Vec2& v0, const DualMclConfig& cfg, Rng& rng) {
  if (state.particles.ps.empty()) throw std::invalid_argument("filter not initialized");

  ConstructedMeasurement meas = construct_measurement(ranges, cfg.layout);

  ParticleSet prop = sample_proposal(meas.r_meas, cfg.sigma_obs, cfg.m, rng);
  KernelDensity2D density = find_density(state.particles, v0, state.v1_hat,
                                         cfg.sigma_mot, cfg.ts, cfg.bandwidth, rng);
  std::vector<Vec2> vels = sample_velocities(state.v1_hat, cfg.sigma_mot, cfg.m, rng);

  Vec2 r_avg{0.0, 0.0};
  for (const auto& p : prop.ps) r_avg += p.x;
  r_avg *= 1.0 / static_cast<double>(prop.ps.size());

  std::vector<Vec2> aux = auxiliary_positions(r_avg, vels, cfg.ts);
  std::vector<double> w =
      importance_weights(prop, density, aux, meas.r_meas, cfg.sigma_obs);

  // Tag-velocity estimate uses the pre-resampling weights.
  Vec2 v1_new{0.0, 0.0};
  for (std::size_t i = 0; i < w.size(); ++i) v1_new += w[i] * vels[i];

  for (std::size_t i = 0; i < w.size(); ++i) prop.ps[i].w = w[i];
  ParticleSet resampled = low_variance_resample(prop, rng);
  resampled.step = state.particles.step + 1;

  FilterEstimate est;
  est.r_hat = estimate_from_particles(resampled);
  est.v1_hat = v1_new;

  state.particles = std::move(resampled);
  state.v1_hat = v1_new;
  return est;
}

}  // namespace relmcl
