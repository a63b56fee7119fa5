#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imudr/frames.hpp"
#include "imudr/gravity.hpp"
#include "imudr/imu_log.hpp"

namespace imudr {

enum class PhaseKind {
  rest,         // a_m = 0, v forced to 0, s held
  accel_pulse,  // stepped zero-net-velocity move (see synth_truth)
  accel_const,  // acceleration held constant for the whole phase
};

/// One script phase. The attitude ramps linearly from `attitude_begin`
/// to `attitude_end` across the phase; keep them equal for a constant
/// attitude (the text format only expresses the constant case).
struct MotionPhase {
  PhaseKind kind = PhaseKind::rest;
  double duration_s = 0.0;
  Vec3 accel = Vec3::Zero();  // nav-frame, m/s^2; peak value for pulses
  EulerAngles attitude_begin;
  EulerAngles attitude_end;
};

struct MotionScript {
  std::vector<MotionPhase> phases;

  double total_duration() const;
};

/// Ground truth at one sample: attitude, nav-frame motion acceleration,
/// and the velocity/displacement reached by integrating it with the
/// same rectangular recurrence the estimator uses.
struct TruthSample {
  double t = 0.0;
  EulerAngles attitude;
  NavAccel a_m;
  Vec3 v = Vec3::Zero();
  Vec3 s = Vec3::Zero();
};

/// Sensor-error model for synthetic logs. Gaussian draws, deterministic
/// per seed. Orientation error perturbs only the reported angles; the
/// truth attitude (and hence the raw reading) is untouched.
struct NoiseModel {
  double accel_white_noise_std = 0.0;   // m/s^2
  Vec3 accel_bias = Vec3::Zero();       // m/s^2
  double orientation_error_std = 0.0;   // radians, per angle per sample
  std::uint64_t seed = 0;

  void validate() const;
  bool silent() const;
};

/// Expands a script into ground-truth kinematics at fixed dt. Each phase
/// spans round(duration/dt) samples (>= 1 required). Rest phases pin
/// v = 0 and hold s. accel-const phases integrate the phase vector as
/// is, carrying velocity across adjacent phases. accel-pulse phases
/// emit repeating 3-sample cells [+A, -A, 0] (remainder 2 -> [+A, -A],
/// remainder 1 -> [0]) so velocity returns to zero inside the phase and
/// the resultant keeps changing sample to sample, which is what the
/// sliding-variance detector needs to see; the scripted vector is the
/// cell's peak acceleration. Throws ConfigError for an empty script.
std::vector<TruthSample> synth_truth(const MotionScript& script, double dt);

/// Runs the measurement model forward: raw = R_bn a_m + R_bi g + bias
/// + white noise, reported angles = truth + orientation error. With
/// zero noise and exact calibration the estimation pipeline inverts
/// this exactly (both sides share one gravity code path and one
/// integration recurrence).
std::vector<ImuSample> synth_imu(const std::vector<TruthSample>& truth,
                                 const FrameCalibration& calib,
                                 const NoiseModel& noise,
                                 const GravityModel& gm = GravityModel{});

struct DriftPoint {
  double t = 0.0;    // seconds
  double rms = 0.0;  // RMS position error over trials, meters
};

/// RMS position error vs time for naive double integration (no stop
/// detection) of a stationary device under the given noise, plus the
/// least-squares slope of log(rms) against log(t). The slope is absent
/// when any checkpoint has zero error (e.g. a silent noise model).
struct DriftResult {
  std::vector<DriftPoint> points;
  std::optional<double> slope;
};

/// Monte-Carlo drift harness; trial k uses seed noise.seed + k. Requires
/// trials >= 10. Checkpoints are log-spaced between 10 dt and duration.
DriftResult drift_experiment(const NoiseModel& noise, double duration_s,
                             int trials, double dt, int n_points = 16);

/// Script file: one phase per line, `kind duration ax ay az roll pitch
/// yaw` (kind rest|accel-pulse|accel-const, SI units, degrees), `#`
/// comments and blank lines allowed.
MotionScript parse_motion_script(std::istream& in);
MotionScript load_motion_script(const std::string& path);

}  // namespace imudr
