#include "relmcl/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace relmcl {

namespace {

using nlohmann::json;

constexpr const char* kTraceHeader =
    "k,t,r_x,r_y,rhat_x,rhat_y,d1,d2,d3,rmeas_x,rmeas_y,v0x_cmd,v0y_cmd,err";
constexpr const char* kCalibrationHeader = "anchor_id,measured_m,truth_m";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("bad numeric field '" + s + "' in " + where);
  }
}

void append_num(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

// Object wrapper that tracks key consumption; finish() rejects leftovers so
// misspelled keys fail loudly instead of silently using defaults.
class StrictObj {
 public:
  StrictObj(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object())
      throw std::runtime_error(path_ + " must be a JSON object");
  }

  const json& require(const char* key) {
    auto it = j_.find(key);
    if (it == j_.end())
      throw std::runtime_error("missing required key '" + join(key) + "'");
    used_.insert(key);
    return *it;
  }

  const json* optional(const char* key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!used_.count(it.key()))
        throw std::runtime_error("unknown key '" + join(it.key()) + "'");
    }
  }

  std::string join(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) throw std::runtime_error(where + " must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw std::runtime_error(where + " must be an integer");
  return j.get<int>();
}

Vec2 as_vec2(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error(where + " must be an array of 2 numbers");
  return {as_double(j[0], where), as_double(j[1], where)};
}

// A scalar broadcasts to every component; an array is taken verbatim.
template <std::size_t N>
std::array<double, N> as_array_or_scalar(const json& j, const std::string& where) {
  std::array<double, N> out{};
  if (j.is_number()) {
    out.fill(j.get<double>());
    return out;
  }
  if (!j.is_array() || j.size() != N)
    throw std::runtime_error(where + " must be a number or an array of " +
                             std::to_string(N) + " numbers");
  for (std::size_t i = 0; i < N; ++i) out[i] = as_double(j[i], where);
  return out;
}

Vec2 as_vec2_or_scalar(const json& j, const std::string& where) {
  auto a = as_array_or_scalar<2>(j, where);
  return {a[0], a[1]};
}

VelocityProfile parse_profile(const json& j, const std::string& path) {
  StrictObj obj(j, path);
  std::string kind = obj.require("kind").get<std::string>();
  VelocityProfile p;
  if (kind == "constant") {
    p = VelocityProfile::constant(as_vec2(obj.require("v"), obj.join("v")));
  } else if (kind == "square_wave") {
    double amp = as_double(obj.require("amp"), obj.join("amp"));
    double period = as_double(obj.require("period_s"), obj.join("period_s"));
    std::string axis = obj.require("axis").get<std::string>();
    if (axis != "x" && axis != "y")
      throw std::runtime_error(obj.join("axis") + " must be \"x\" or \"y\"");
    Vec2 base{0.0, 0.0};
    if (const json* b = obj.optional("base")) base = as_vec2(*b, obj.join("base"));
    p = VelocityProfile::square_wave(amp, period, axis == "x" ? 0 : 1, base);
  } else if (kind == "piecewise") {
    const json& pts = obj.require("points");
    if (!pts.is_array() || pts.empty())
      throw std::runtime_error(obj.join("points") + " must be a nonempty array");
    std::vector<PiecewisePoint> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::string ppath = obj.join("points[" + std::to_string(i) + "]");
      StrictObj pt(pts[i], ppath);
      PiecewisePoint pp;
      pp.t = as_double(pt.require("t"), ppath + ".t");
      pp.v = as_vec2(pt.require("v"), ppath + ".v");
      pt.finish();
      points.push_back(pp);
    }
    p = VelocityProfile::piecewise(std::move(points));
  } else {
    throw std::runtime_error(obj.join("kind") +
                             ": unknown profile kind '" + kind + "'");
  }
  obj.finish();
  validate_profile(p);
  return p;
}

RobotLimits parse_limits(StrictObj& obj) {
  RobotLimits lim;
  if (const json* v = obj.optional("v_min")) lim.v_min = as_vec2_or_scalar(*v, obj.join("v_min"));
  if (const json* v = obj.optional("v_max")) lim.v_max = as_vec2_or_scalar(*v, obj.join("v_max"));
  if (const json* v = obj.optional("a_min")) lim.a_min = as_vec2_or_scalar(*v, obj.join("a_min"));
  if (const json* v = obj.optional("a_max")) lim.a_max = as_vec2_or_scalar(*v, obj.join("a_max"));
  return lim;
}

RobotSpec parse_robot(const json& j, const std::string& path, bool* has_profile,
                      VelocityProfile* profile, AnchorActuation* actuation) {
  StrictObj obj(j, path);
  RobotSpec spec;
  spec.init.p = as_vec2(obj.require("p"), obj.join("p"));
  spec.init.v = as_vec2(obj.require("v"), obj.join("v"));
  spec.limits = parse_limits(obj);
  if (const json* s = obj.optional("sigma_mot"))
    spec.sigma_mot = as_vec2_or_scalar(*s, obj.join("sigma_mot"));

  if (actuation) {
    const json& act = obj.require("actuation");
    StrictObj a(act, obj.join("actuation"));
    std::string kind = a.require("kind").get<std::string>();
    if (kind == "profile") {
      actuation->kind = AnchorActuation::Kind::profile;
      actuation->profile = parse_profile(a.require("profile"), a.join("profile"));
    } else if (kind == "formation") {
      actuation->kind = AnchorActuation::Kind::formation;
      FormationGoal g;
      g.r_des = as_vec2(a.require("r_des"), a.join("r_des"));
      if (const json* v = a.optional("k_v")) g.k_v = as_double(*v, a.join("k_v"));
      if (const json* v = a.optional("deadzone")) g.deadzone = as_double(*v, a.join("deadzone"));
      if (const json* v = a.optional("v_limit")) g.v_limit = as_vec2_or_scalar(*v, a.join("v_limit"));
      actuation->goal = g;
    } else {
      throw std::runtime_error(a.join("kind") + ": unknown actuation kind '" + kind + "'");
    }
    a.finish();
  }
  if (has_profile && profile) {
    *profile = parse_profile(obj.require("profile"), obj.join("profile"));
    *has_profile = true;
  }
  obj.finish();
  return spec;
}

FilterSpec parse_filter(const json& j, const std::string& path,
                        const RangeNoiseModel& noise) {
  StrictObj obj(j, path);
  FilterSpec fs;
  fs.estimator = estimator_from_name(obj.require("estimator").get<std::string>());
  if (const json* v = obj.optional("m")) fs.m = as_int(*v, obj.join("m"));
  if (const json* v = obj.optional("sigma_obs"))
    fs.sigma_obs = as_vec2_or_scalar(*v, obj.join("sigma_obs"));
  if (const json* v = obj.optional("sigma_mot"))
    fs.sigma_mot = as_vec2_or_scalar(*v, obj.join("sigma_mot"));
  if (const json* v = obj.optional("kde_bandwidth")) {
    if (v->is_string() && v->get<std::string>() == "scott") {
      fs.bandwidth.kind = BandwidthKind::scott;
    } else if (v->is_number()) {
      fs.bandwidth.kind = BandwidthKind::fixed;
      fs.bandwidth.fixed_h = v->get<double>();
    } else {
      throw std::runtime_error(obj.join("kde_bandwidth") +
                               " must be \"scott\" or a positive number");
    }
  }
  // Sensor-model defaults for the baselines follow the configured range
  // noise, floored so zero-noise scenarios stay well posed.
  for (int i = 0; i < 3; ++i) {
    fs.pf_sigma_range[static_cast<std::size_t>(i)] =
        std::max(noise.sigma[static_cast<std::size_t>(i)], 1e-3);
    fs.ekf_meas_sigma[static_cast<std::size_t>(i)] =
        fs.pf_sigma_range[static_cast<std::size_t>(i)];
  }
  fs.ekf_process_sigma = {0.01, 0.01, fs.sigma_mot.x, fs.sigma_mot.y};
  if (const json* v = obj.optional("pf_sigma_range"))
    fs.pf_sigma_range = as_array_or_scalar<3>(*v, obj.join("pf_sigma_range"));
  if (const json* v = obj.optional("ekf_process_sigma"))
    fs.ekf_process_sigma = as_array_or_scalar<4>(*v, obj.join("ekf_process_sigma"));
  if (const json* v = obj.optional("ekf_meas_sigma"))
    fs.ekf_meas_sigma = as_array_or_scalar<3>(*v, obj.join("ekf_meas_sigma"));
  if (const json* v = obj.optional("ekf_init_v_sigma"))
    fs.ekf_init_v_sigma = as_vec2_or_scalar(*v, obj.join("ekf_init_v_sigma"));
  obj.finish();
  return fs;
}

ScenarioConfig parse_scenario(const json& j) {
  StrictObj obj(j, "");
  ScenarioConfig cfg;
  const json& seed = obj.require("seed");
  if (!seed.is_number_integer() || seed.get<long long>() < 0)
    throw std::runtime_error("seed must be a nonnegative integer");
  cfg.seed = seed.get<std::uint64_t>();
  cfg.f_hz = as_double(obj.require("f_hz"), "f_hz");
  cfg.n_steps = as_int(obj.require("n_steps"), "n_steps");
  cfg.layout.a = as_double(obj.require("anchor_a"), "anchor_a");

  {
    StrictObj noise(obj.require("noise"), "noise");
    if (const json* b = noise.optional("bias"))
      cfg.noise.bias = as_array_or_scalar<3>(*b, "noise.bias");
    cfg.noise.sigma = as_array_or_scalar<3>(noise.require("sigma"), "noise.sigma");
    noise.finish();
  }
  {
    StrictObj region(obj.require("init_region"), "init_region");
    cfg.init_region.lo = as_vec2(region.require("lo"), "init_region.lo");
    cfg.init_region.hi = as_vec2(region.require("hi"), "init_region.hi");
    region.finish();
  }
  cfg.robot0 = parse_robot(obj.require("anchor_robot"), "anchor_robot", nullptr,
                           nullptr, &cfg.actuation0);
  bool has_profile = false;
  cfg.robot1 = parse_robot(obj.require("tag_robot"), "tag_robot", &has_profile,
                           &cfg.profile1, nullptr);
  cfg.filter = parse_filter(obj.require("filter"), "filter", cfg.noise);
  obj.finish();
  validate_scenario(cfg);
  return cfg;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error("invalid JSON");
  return j;
}

}  // namespace

void write_trace_csv(const std::string& path, const ScenarioTrace& trace) {
  std::string out = kTraceHeader;
  out += '\n';
  for (const auto& s : trace.steps) {
    out += std::to_string(s.k);
    const double cols[] = {s.t,      s.r_true.x, s.r_true.y, s.r_hat.x, s.r_hat.y,
                           s.d.d1,   s.d.d2,     s.d.d3,     s.r_meas.x, s.r_meas.y,
                           s.v0_cmd.x, s.v0_cmd.y, s.err};
    for (double c : cols) {
      out += ',';
      append_num(out, c);
    }
    out += '\n';
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << out;
  if (!f) throw std::runtime_error("failed writing " + path);
}

ScenarioTrace read_trace_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty trace file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader)
    throw std::runtime_error(path + ": unexpected trace header '" + line + "'");

  ScenarioTrace trace;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    std::string where = path + ":" + std::to_string(lineno);
    if (fields.size() != 14)
      throw std::runtime_error(where + ": expected 14 fields, got " +
                               std::to_string(fields.size()));
    TraceStep s;
    s.k = static_cast<int>(parse_double(fields[0], where));
    s.t = parse_double(fields[1], where);
    s.r_true = {parse_double(fields[2], where), parse_double(fields[3], where)};
    s.r_hat = {parse_double(fields[4], where), parse_double(fields[5], where)};
    s.d = {parse_double(fields[6], where), parse_double(fields[7], where),
           parse_double(fields[8], where)};
    s.r_meas = {parse_double(fields[9], where), parse_double(fields[10], where)};
    s.v0_cmd = {parse_double(fields[11], where), parse_double(fields[12], where)};
    s.err = parse_double(fields[13], where);
    trace.steps.push_back(s);
  }
  return trace;
}

ScenarioConfig parse_scenario_json(const std::string& text) {
  return parse_scenario(parse_json_text(text));
}

ScenarioConfig read_scenario_json(const std::string& path) {
  try {
    return parse_scenario_json(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

SweepSpec parse_sweep_json(const std::string& text) {
  json j = parse_json_text(text);
  StrictObj obj(j, "");
  SweepSpec spec;
  spec.base = parse_scenario(obj.require("base"));
  spec.axis = sweep_axis_from_name(obj.require("axis").get<std::string>());
  const json& values = obj.require("values");
  if (!values.is_array() || values.empty())
    throw std::runtime_error("values must be a nonempty array");
  for (const auto& v : values) {
    if (spec.axis == SweepAxis::estimator) {
      if (!v.is_string())
        throw std::runtime_error("estimator sweep values must be estimator names");
      spec.estimators.push_back(estimator_from_name(v.get<std::string>()));
    } else {
      spec.values.push_back(as_double(v, "values"));
    }
  }
  if (const json* r = obj.optional("repeats")) spec.repeats = as_int(*r, "repeats");
  if (const json* s = obj.optional("skip_transient"))
    spec.skip_transient = as_int(*s, "skip_transient");
  obj.finish();
  return spec;
}

SweepSpec read_sweep_json(const std::string& path) {
  try {
    return parse_sweep_json(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<CalibrationSample> read_calibration_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCalibrationHeader)
    throw std::runtime_error(path + ": expected header '" +
                             std::string(kCalibrationHeader) + "'");
  std::vector<CalibrationSample> samples;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    std::string where = path + ":" + std::to_string(lineno);
    if (fields.size() != 3)
      throw std::runtime_error(where + ": expected 3 fields, got " +
                               std::to_string(fields.size()));
    CalibrationSample s;
    s.anchor_id = static_cast<int>(parse_double(fields[0], where));
    s.measured_m = parse_double(fields[1], where);
    s.truth_m = parse_double(fields[2], where);
    samples.push_back(s);
  }
  return samples;
}

void write_sweep_csv(const std::string& path, SweepAxis axis, const SweepResult& result) {
  std::string out = "axis,value,seed,rmse\n";
  for (const auto& run : result.runs) {
    out += sweep_axis_name(axis);
    out += ',';
    out += run.label;
    out += ',';
    out += std::to_string(run.seed);
    out += ',';
    append_num(out, run.rmse);
    out += '\n';
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << out;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace relmcl
