#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imudr/frames.hpp"
#include "imudr/gravity.hpp"
#include "imudr/imu_log.hpp"
#include "imudr/integrator.hpp"
#include "imudr/motion_detect.hpp"

namespace imudr {

/// Everything a pipeline run needs besides the log itself.
struct RunConfig {
  DetectorConfig detector;
  GravityModel gravity;
  FrameCalibration calibration;      // identity unless a file is given
  std::optional<double> dt_override;  // seconds; otherwise inferred
};

/// Per-sample intermediate signals, one entry per input sample.
struct Diagnostics {
  std::vector<NavAccel> a_m_nav;
  std::vector<double> a_mr;
  std::vector<double> variance;
  MotionMask mask;
};

struct PipelineResult {
  TrajectoryEstimate estimate;
  std::vector<MotionSegment> segments;
  Diagnostics diagnostics;
  double dt = 0.0;
};

/// Separation -> projection -> stop detection -> segment-wise double
/// integration, in that order. Requires at least window_n samples.
/// Trajectory timestamps are the input timestamps.
PipelineResult run_pipeline(const std::vector<ImuSample>& samples,
                            const RunConfig& config);

/// Config file: `key = value` lines, `#` comments. Keys (all optional):
/// window_n, lambda_v, lambda_m, g, dt, calibration_file. A relative
/// calibration_file resolves against `base_dir`.
RunConfig parse_run_config(std::istream& in, const std::string& base_dir);
RunConfig load_run_config(const std::string& path);

}  // namespace imudr
