#include "imudr/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "imudr/errors.hpp"
#include "imudr/format.hpp"
#include "imudr/reports.hpp"

namespace imudr {
namespace {

RunConfig load_config_or_default(const std::string& config_path,
                                 const std::string& calib_path) {
  RunConfig config;
  if (!config_path.empty()) {
    config = load_run_config(config_path);
  }
  if (!calib_path.empty()) {
    config.calibration = load_calibration(calib_path);
  }
  return config;
}

}  // namespace

PipelineResult command_run(const RunOptions& opt, std::ostream& log) {
  RunConfig config = load_config_or_default(opt.config_path, opt.calib_path);
  if (opt.dt) config.dt_override = opt.dt;

  const auto samples = load_imu_log(opt.log_path);
  PipelineResult result = run_pipeline(samples, config);
  emit_reports(result, opt.out_dir);

  log << "samples: " << samples.size() << ", dt: " << format_double(result.dt)
      << " s, motion segments: " << result.segments.size() << '\n';
  for (const MotionSegment& seg : result.segments) {
    const double t0 = result.estimate.states[seg.begin].t;
    const double t1 = result.estimate.states[seg.end].t;
    log << "  [" << seg.begin << ", " << seg.end << "]  "
        << format_double((t1 - t0) * 1000.0) << " ms\n";
  }
  const Vec3 s = result.estimate.states.back().s;
  log << "final displacement: (" << format_double(s.x()) << ", "
      << format_double(s.y()) << ", " << format_double(s.z()) << ") m\n";
  log << "reports written to " << opt.out_dir << '\n';
  return result;
}

void command_simulate(const SimulateOptions& opt, std::ostream& log) {
  const MotionScript script = load_motion_script(opt.script_path);
  const FrameCalibration calib = opt.calib_path.empty()
                                     ? FrameCalibration::identity()
                                     : load_calibration(opt.calib_path);
  const auto truth = synth_truth(script, opt.dt);
  const auto samples = synth_imu(truth, calib, opt.noise);
  save_imu_log(opt.out_path, samples);
  log << "wrote " << samples.size() << " samples ("
      << format_double(script.total_duration()) << " s) to " << opt.out_path
      << '\n';
}

DriftResult command_drift(const DriftOptions& opt, std::ostream& log) {
  NoiseModel noise;
  noise.accel_white_noise_std = opt.sigma_a;
  noise.seed = opt.seed;
  const DriftResult result =
      drift_experiment(noise, opt.duration_s, opt.trials, opt.dt);
  emit_drift_report(result, opt.out_dir);
  log << "trials: " << opt.trials << ", duration: "
      << format_double(opt.duration_s) << " s, sigma_a: "
      << format_double(opt.sigma_a) << " m/s^2\n";
  log << "log-log slope: " << (result.slope ? format_double(*result.slope) : "n/a")
      << '\n';
  log << "curve written to " << opt.out_dir << '\n';
  return result;
}

RoundtripReport roundtrip(const MotionScript& script, const RunConfig& config,
                          const FrameCalibration& calib, const NoiseModel& noise,
                          double dt) {
  const auto truth = synth_truth(script, dt);
  const auto samples = synth_imu(truth, calib, noise, config.gravity);

  RunConfig run_config = config;
  run_config.calibration = calib;
  run_config.dt_override = dt;
  const PipelineResult result = run_pipeline(samples, run_config);

  RoundtripReport report;
  report.samples = samples.size();
  report.segments = result.segments.size();
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const Vec3 diff =
        result.estimate.states[i].s - (calib.origin_nav + truth[i].s);
    report.max_displacement_error =
        std::max(report.max_displacement_error, diff.norm());
    if (i + 1 == truth.size()) report.final_displacement_error = diff.norm();
  }
  return report;
}

RoundtripReport command_roundtrip(const RoundtripOptions& opt, std::ostream& log) {
  const MotionScript script = load_motion_script(opt.script_path);
  const RunConfig config = load_config_or_default(opt.config_path, "");
  const FrameCalibration calib = opt.calib_path.empty()
                                     ? FrameCalibration::identity()
                                     : load_calibration(opt.calib_path);
  const RoundtripReport report =
      roundtrip(script, config, calib, opt.noise, opt.dt);
  log << "samples: " << report.samples << ", detected segments: "
      << report.segments << '\n';
  log << "max displacement error: "
      << format_double(report.max_displacement_error) << " m\n";
  log << "final displacement error: "
      << format_double(report.final_displacement_error) << " m\n";
  return report;
}

}  // namespace imudr
