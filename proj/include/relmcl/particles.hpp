#pragma once

#include <vector>

#include "relmcl/rng.hpp"
#include "relmcl/vec2.hpp"

namespace relmcl {

struct Particle {
  Vec2 x;
  double w = 0.0;
};

struct ParticleSet {
  std::vector<Particle> ps;
  int step = 0;

  std::size_t size() const { return ps.size(); }
  std::vector<Vec2> positions() const;
};

// Uniform particles over the region (a point when lo == hi), weights 1/m.
ParticleSet init_particles(const Box2& region, int m, Rng& rng);

// Normalizes in place. Falls back to uniform weights and returns true when
// the raw weights sum to zero or contain a non-finite value.
bool normalize_weights(std::vector<double>& w);

// Weighted mean of the particle positions; expects normalized weights.
Vec2 estimate_from_particles(const ParticleSet& set);

// Systematic (low-variance) resampling with a single uniform draw in
// [0, 1/m) and comb spacing 1/m. Output weights are uniform.
ParticleSet low_variance_resample(const ParticleSet& set, Rng& rng);

}  // namespace relmcl
