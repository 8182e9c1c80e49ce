#pragma once

#include <cstdint>
#include <vector>

#include "relmcl/control.hpp"
#include "relmcl/dual_mcl.hpp"
#include "relmcl/ekf.hpp"
#include "relmcl/geometry.hpp"
#include "relmcl/motion.hpp"
#include "relmcl/profile.hpp"
#include "relmcl/sensing.hpp"
#include "relmcl/standard_pf.hpp"

namespace relmcl {

enum class EstimatorKind { dual_mcl, standard_pf, ekf };

const char* estimator_name(EstimatorKind kind);
EstimatorKind estimator_from_name(const std::string& name);

struct RobotSpec {
  RobotState init;
  RobotLimits limits;
  Vec2 sigma_mot{0.0, 0.0};  // true per-axis process noise std
};

// The anchor robot either follows an external velocity profile or closes the
// loop through the formation controller.
struct AnchorActuation {
  enum class Kind { profile, formation };
  Kind kind = Kind::profile;
  VelocityProfile profile;
  FormationGoal goal;
};

struct FilterSpec {
  EstimatorKind estimator = EstimatorKind::dual_mcl;
  int m = 200;
  Vec2 sigma_obs{1.0, 1.0};
  Vec2 sigma_mot{0.7071067811865476, 0.7071067811865476};
  BandwidthRule bandwidth;
  std::array<double, 3> pf_sigma_range{0.05, 0.05, 0.05};
  std::array<double, 4> ekf_process_sigma{0.01, 0.01, 0.5, 0.5};
  std::array<double, 3> ekf_meas_sigma{0.05, 0.05, 0.05};
  Vec2 ekf_init_v_sigma{1.0, 1.0};
};

struct ScenarioConfig {
  std::uint64_t seed = 1;
  double f_hz = 10.0;
  int n_steps = 300;
  AnchorLayout layout;
  RangeNoiseModel noise;
  Box2 init_region;
  RobotSpec robot0;  // anchor robot
  RobotSpec robot1;  // tag robot
  AnchorActuation actuation0;
  VelocityProfile profile1;
  FilterSpec filter;

  double ts() const { return 1.0 / f_hz; }
};

struct TraceStep {
  int k = 0;
  double t = 0.0;
  Vec2 r_true;
  RangeTriple d;
  Vec2 r_meas;
  Vec2 r_hat;
  Vec2 v1_hat;
  Vec2 v0_cmd;
  double err = 0.0;
};

struct ScenarioTrace {
  std::vector<TraceStep> steps;
};

// Throws std::invalid_argument naming the offending field.
void validate_scenario(const ScenarioConfig& cfg);

// Runs the loop sense -> estimate -> command -> integrate at a single rate.
// The trace is a pure function of the config: same config, same bits.
ScenarioTrace run_scenario(const ScenarioConfig& cfg);

}  // namespace relmcl
