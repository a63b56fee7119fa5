#include "imudr/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "imudr/errors.hpp"

namespace imudr {
namespace {

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& value, std::size_t line_no) {
  double out = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size() ||
      value.empty()) {
    throw ParseError("not a number: '" + value + "'", line_no);
  }
  return out;
}

int to_int(const std::string& value, std::size_t line_no) {
  int out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size() ||
      value.empty()) {
    throw ParseError("not an integer: '" + value + "'", line_no);
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(const std::vector<ImuSample>& samples,
                            const RunConfig& config) {
  config.detector.validate();
  if (samples.size() < static_cast<std::size_t>(config.detector.window_n)) {
    throw ConfigError("log has fewer samples than the detector window");
  }
  if (config.dt_override && !(*config.dt_override > 0.0)) {
    throw ConfigError("dt override must be positive");
  }
  const double dt = config.dt_override ? *config.dt_override : infer_dt(samples);

  PipelineResult result;
  result.dt = dt;
  Diagnostics& diag = result.diagnostics;
  diag.a_m_nav.reserve(samples.size());
  diag.a_mr.reserve(samples.size());
  for (const ImuSample& sample : samples) {
    const BodyAccel am_body =
        motion_accel_body(sample.accel, sample.angles, config.gravity);
    const NavAccel am_nav =
        motion_accel_nav(am_body, sample.angles, config.calibration);
    diag.a_m_nav.push_back(am_nav);
    diag.a_mr.push_back(resultant_accel(am_nav));
  }

  diag.variance = sliding_variance(diag.a_mr, config.detector.window_n);
  diag.mask = threshold_mask(diag.variance, config.detector.lambda_v);
  result.segments = segment_motion(diag.mask, config.detector.lambda_m);

  result.estimate = reconstruct(diag.a_m_nav, result.segments, dt,
                                config.calibration.origin_nav);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    result.estimate.states[i].t = samples[i].t;
  }
  return result;
}

RunConfig parse_run_config(std::istream& in, const std::string& base_dir) {
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string text = strip(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    const std::string key = strip(text.substr(0, eq));
    const std::string value = strip(text.substr(eq + 1));
    if (key == "window_n") {
      config.detector.window_n = to_int(value, line_no);
    } else if (key == "lambda_v") {
      config.detector.lambda_v = to_double(value, line_no);
    } else if (key == "lambda_m") {
      config.detector.lambda_m = to_int(value, line_no);
    } else if (key == "g") {
      config.gravity.g_magnitude = to_double(value, line_no);
    } else if (key == "dt") {
      config.dt_override = to_double(value, line_no);
    } else if (key == "calibration_file") {
      std::filesystem::path p(value);
      if (p.is_relative() && !base_dir.empty()) {
        p = std::filesystem::path(base_dir) / p;
      }
      config.calibration = load_calibration(p.string());
    } else {
      throw ParseError("unknown config key '" + key + "'", line_no);
    }
  }
  config.detector.validate();
  if (!(config.gravity.g_magnitude > 0.0)) {
    throw ConfigError("g must be positive");
  }
  if (config.dt_override && !(*config.dt_override > 0.0)) {
    throw ConfigError("dt must be positive");
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file: " + path);
  }
  return parse_run_config(in, std::filesystem::path(path).parent_path().string());
}

}  // namespace imudr
