#pragma once

#include <string>
#include <vector>

#include "relmcl/scenario.hpp"
#include "relmcl/sensing.hpp"
#include "relmcl/sweep.hpp"

namespace relmcl {

// Trace CSV column set, in order:
// k,t,r_x,r_y,rhat_x,rhat_y,d1,d2,d3,rmeas_x,rmeas_y,v0x_cmd,v0y_cmd,err
// Values are printed with 17 significant digits so a round trip is exact.
void write_trace_csv(const std::string& path, const ScenarioTrace& trace);
ScenarioTrace read_trace_csv(const std::string& path);

// Scenario config as strict JSON: unknown keys are rejected and missing
// required keys are reported by name.
ScenarioConfig read_scenario_json(const std::string& path);
ScenarioConfig parse_scenario_json(const std::string& text);

// Sweep spec JSON: {"base": {...scenario...}, "axis": ..., "values": [...],
// "repeats": n}; estimator axis takes names in "values".
SweepSpec read_sweep_json(const std::string& path);
SweepSpec parse_sweep_json(const std::string& text);

// Calibration records CSV with header: anchor_id,measured_m,truth_m
std::vector<CalibrationSample> read_calibration_csv(const std::string& path);

// Per-run sweep results: axis,value,seed,rmse (one row per run).
void write_sweep_csv(const std::string& path, SweepAxis axis, const SweepResult& result);

}  // namespace relmcl
