#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "imudr/pipeline.hpp"
#include "imudr/simulator.hpp"

namespace imudr {

/// `run`: load a log, execute the pipeline, write the four reports.
struct RunOptions {
  std::string log_path;
  std::string config_path;   // optional; defaults otherwise
  std::string calib_path;    // optional; overrides the config's calibration
  std::string out_dir = "out";
  std::optional<double> dt;  // overrides config/inference
};
PipelineResult command_run(const RunOptions& opt, std::ostream& log);

/// `simulate`: expand a script, apply the noise model, write a log.
struct SimulateOptions {
  std::string script_path;
  std::string out_path = "imu_log.csv";
  std::string calib_path;  // optional
  double dt = 0.025;
  NoiseModel noise;
};
void command_simulate(const SimulateOptions& opt, std::ostream& log);

/// `drift`: Monte-Carlo drift curve plus fitted log-log slope.
struct DriftOptions {
  double sigma_a = 0.01;  // m/s^2
  double duration_s = 60.0;
  int trials = 100;
  double dt = 0.025;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
};
DriftResult command_drift(const DriftOptions& opt, std::ostream& log);

/// `roundtrip`: simulate, run the pipeline on the synthetic log, and
/// compare against ground truth sample by sample.
struct RoundtripOptions {
  std::string script_path;
  std::string calib_path;  // optional
  std::string config_path; // optional
  double dt = 0.025;
  NoiseModel noise;
};
struct RoundtripReport {
  double max_displacement_error = 0.0;  // meters, max over samples
  double final_displacement_error = 0.0;
  std::size_t samples = 0;
  std::size_t segments = 0;
};
RoundtripReport roundtrip(const MotionScript& script, const RunConfig& config,
                          const FrameCalibration& calib, const NoiseModel& noise,
                          double dt);
RoundtripReport command_roundtrip(const RoundtripOptions& opt, std::ostream& log);

}  // namespace imudr
