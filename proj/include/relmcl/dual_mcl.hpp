#pragma once

#include <vector>

#include "relmcl/geometry.hpp"
#include "relmcl/kde.hpp"
#include "relmcl/particles.hpp"
#include "relmcl/rng.hpp"

namespace relmcl {

enum class BandwidthKind { scott, fixed };

struct BandwidthRule {
  BandwidthKind kind = BandwidthKind::scott;
  double fixed_h = 0.5;
};

struct DualMclConfig {
  int m = 200;
  Vec2 sigma_obs{1.0, 1.0};  // proposal spread around the constructed fix
  Vec2 sigma_mot{0.7071067811865476, 0.7071067811865476};  // tag velocity spread
  double ts = 0.1;
  BandwidthRule bandwidth;
  AnchorLayout layout;
};

struct FilterEstimate {
  Vec2 r_hat;
  Vec2 v1_hat;
};

struct FilterState {
  ParticleSet particles;
  Vec2 v1_hat{0.0, 0.0};
};

// Uniform particle cloud over the init region, zero initial tag-velocity
// estimate.
FilterState init_filter(const Box2& init_region, int m, Rng& rng);

// m particles drawn from N(r_meas, diag(sigma_obs^2)), uniform weights.
ParticleSet sample_proposal(const Vec2& r_meas, const Vec2& sigma_obs, int m,
                            Rng& rng);

// m tag-velocity hypotheses ~ N(v1_hat_prev, diag(sigma_mot^2)).
std::vector<Vec2> sample_velocities(const Vec2& v1_hat_prev, const Vec2& sigma_mot,
                                    int m, Rng& rng);

// r_tilde_i = r_avg + v_i * ts.
std::vector<Vec2> auxiliary_positions(const Vec2& r_avg,
                                      const std::vector<Vec2>& velocities,
                                      double ts);

// Motion-model density: every previous particle is pushed through the
// relative kinematics with a fresh velocity hypothesis, then smoothed with a
// Gaussian kernel.
KernelDensity2D find_density(const ParticleSet& prev, const Vec2& v0,
                             const Vec2& v1_hat_prev, const Vec2& sigma_mot,
                             double ts, const BandwidthRule& bw, Rng& rng);

// w_i ~ density(x_i) * N(aux_i; r_meas, diag(sigma_obs^2)), normalized, with
// a uniform fallback when every raw weight is zero or non-finite.
std::vector<double> importance_weights(const ParticleSet& particles,
                                       const KernelDensity2D& density,
                                       const std::vector<Vec2>& aux,
                                       const Vec2& r_meas, const Vec2& sigma_obs);

// One dual MCL update. Roles are inverted relative to a standard particle
// filter: particles come from the measurement, weights from the motion model.
FilterEstimate dual_mcl_step(FilterState& state, const RangeTriple& ranges,
                             const Vec2& v0, const DualMclConfig& cfg, Rng& rng);

}  // namespace relmcl
