#include "imudr/simulator.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "imudr/errors.hpp"
#include "imudr/integrator.hpp"

namespace imudr {
namespace {

// Per-sample scale factors of a stepped pulse: full cells accelerate,
// brake, settle; the two leftover shapes also close at zero velocity.
double pulse_coefficient(std::size_t i, std::size_t n_samples) {
  const std::size_t cells_end = (n_samples / 3) * 3;
  if (i < cells_end) {
    switch (i % 3) {
      case 0: return 1.0;
      case 1: return -1.0;
      default: return 0.0;
    }
  }
  if (n_samples - cells_end == 2) {
    return i == cells_end ? 1.0 : -1.0;
  }
  return 0.0;  // single leftover sample
}

EulerAngles lerp_attitude(const EulerAngles& a, const EulerAngles& b,
                          double f) {
  return EulerAngles{a.roll + (b.roll - a.roll) * f,
                     a.pitch + (b.pitch - a.pitch) * f,
                     a.yaw + (b.yaw - a.yaw) * f};
}

std::size_t phase_sample_count(const MotionPhase& phase, double dt) {
  if (!(phase.duration_s > 0.0) || !std::isfinite(phase.duration_s)) {
    throw ConfigError("phase duration must be positive");
  }
  const auto n = static_cast<long long>(std::llround(phase.duration_s / dt));
  if (n < 1) {
    throw ConfigError("phase duration shorter than half a sample period");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

double MotionScript::total_duration() const {
  double total = 0.0;
  for (const MotionPhase& p : phases) total += p.duration_s;
  return total;
}

void NoiseModel::validate() const {
  if (accel_white_noise_std < 0.0 || orientation_error_std < 0.0) {
    throw ConfigError("noise standard deviations must be >= 0");
  }
  if (!accel_bias.allFinite()) {
    throw ConfigError("accelerometer bias must be finite");
  }
}

bool NoiseModel::silent() const {
  return accel_white_noise_std == 0.0 && orientation_error_std == 0.0 &&
         accel_bias.isZero();
}

std::vector<TruthSample> synth_truth(const MotionScript& script, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("dt must be positive");
  }
  if (script.phases.empty()) {
    throw ConfigError("motion script has no phases");
  }

  std::vector<TruthSample> truth;
  Vec3 v = Vec3::Zero();
  Vec3 s = Vec3::Zero();
  std::size_t index = 0;
  for (const MotionPhase& phase : script.phases) {
    if (!phase.accel.allFinite()) {
      throw ConfigError("phase acceleration must be finite");
    }
    const std::size_t n = phase_sample_count(phase, dt);
    for (std::size_t i = 0; i < n; ++i, ++index) {
      TruthSample sample;
      sample.t = static_cast<double>(index) * dt;
      const double frac =
          n == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      sample.attitude = lerp_attitude(phase.attitude_begin, phase.attitude_end, frac);
      Vec3 a = Vec3::Zero();
      switch (phase.kind) {
        case PhaseKind::rest:
          v = Vec3::Zero();
          break;
        case PhaseKind::accel_const:
          a = phase.accel;
          break;
        case PhaseKind::accel_pulse:
          a = phase.accel * pulse_coefficient(i, n);
          break;
      }
      if (phase.kind != PhaseKind::rest) {
        v += a * dt;
        s += v * dt;
      }
      sample.a_m = NavAccel(a);
      sample.v = v;
      sample.s = s;
      truth.push_back(sample);
    }
  }
  return truth;
}

std::vector<ImuSample> synth_imu(const std::vector<TruthSample>& truth,
                                 const FrameCalibration& calib,
                                 const NoiseModel& noise,
                                 const GravityModel& gm) {
  noise.validate();
  std::mt19937_64 rng(noise.seed);
  std::normal_distribution<double> unit(0.0, 1.0);

  std::vector<ImuSample> samples;
  samples.reserve(truth.size());
  for (const TruthSample& ts : truth) {
    const RotationMatrix r_bi = rotation_body_from_inertial(ts.attitude);
    const RotationMatrix r_bn = compose_body_from_nav(r_bi, calib);
    // Same gravity code path as the estimator, so noiseless logs cancel
    // bit for bit in the separation step.
    const Vec3 gravity_body = gravity_in_body(ts.attitude, gm).v;
    Vec3 raw = r_bn.matrix() * ts.a_m.v + gravity_body;
    EulerAngles reported = ts.attitude;
    if (!noise.silent()) {
      raw += noise.accel_bias;
      raw += noise.accel_white_noise_std * Vec3(unit(rng), unit(rng), unit(rng));
      reported.roll += noise.orientation_error_std * unit(rng);
      reported.pitch += noise.orientation_error_std * unit(rng);
      reported.yaw += noise.orientation_error_std * unit(rng);
    }
    samples.push_back(ImuSample{ts.t, BodyAccel(raw), reported});
  }
  return samples;
}

DriftResult drift_experiment(const NoiseModel& noise, double duration_s,
                             int trials, double dt, int n_points) {
  noise.validate();
  if (trials < 10) {
    throw ConfigError("drift experiment needs at least 10 trials");
  }
  if (!(dt > 0.0) || !(duration_s > 10.0 * dt)) {
    throw ConfigError("drift duration must exceed 10 sample periods");
  }
  if (n_points < 2) {
    throw ConfigError("drift experiment needs at least 2 checkpoints");
  }

  const auto n_samples = static_cast<std::size_t>(std::llround(duration_s / dt));

  // Log-spaced checkpoint indices in [10, n_samples], deduplicated.
  std::vector<std::size_t> checkpoints;
  const double log_lo = std::log(10.0 * dt);
  const double log_hi = std::log(static_cast<double>(n_samples) * dt);
  for (int j = 0; j < n_points; ++j) {
    const double f = static_cast<double>(j) / static_cast<double>(n_points - 1);
    const double t = std::exp(log_lo + f * (log_hi - log_lo));
    auto idx = static_cast<std::size_t>(std::llround(t / dt));
    idx = std::min(std::max<std::size_t>(idx, 1), n_samples);
    if (checkpoints.empty() || idx > checkpoints.back()) {
      checkpoints.push_back(idx);
    }
  }

  // Stationary truth at level attitude.
  MotionScript script;
  script.phases.push_back(MotionPhase{PhaseKind::rest, duration_s, Vec3::Zero(),
                                      EulerAngles{}, EulerAngles{}});
  const std::vector<TruthSample> truth = synth_truth(script, dt);
  const FrameCalibration calib = FrameCalibration::identity();
  const GravityModel gm;

  std::vector<double> sum_sq(checkpoints.size(), 0.0);
  for (int trial = 0; trial < trials; ++trial) {
    NoiseModel trial_noise = noise;
    trial_noise.seed = noise.seed + static_cast<std::uint64_t>(trial);
    const std::vector<ImuSample> imu = synth_imu(truth, calib, trial_noise, gm);

    std::vector<NavAccel> am_nav;
    am_nav.reserve(imu.size());
    for (const ImuSample& s : imu) {
      const BodyAccel am_body = motion_accel_body(s.accel, s.angles, gm);
      am_nav.push_back(motion_accel_nav(am_body, s.angles, calib));
    }
    const auto states =
        integrate_segment(am_nav, dt, Vec3::Zero(), Vec3::Zero());
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      sum_sq[c] += states[checkpoints[c] - 1].s.squaredNorm();
    }
  }

  DriftResult result;
  result.points.reserve(checkpoints.size());
  bool any_zero = false;
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    const double rms = std::sqrt(sum_sq[c] / static_cast<double>(trials));
    if (rms == 0.0) any_zero = true;
    result.points.push_back(
        DriftPoint{static_cast<double>(checkpoints[c]) * dt, rms});
  }

  if (!any_zero && result.points.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (const DriftPoint& p : result.points) {
      mx += std::log(p.t);
      my += std::log(p.rms);
    }
    mx /= static_cast<double>(result.points.size());
    my /= static_cast<double>(result.points.size());
    double sxy = 0.0, sxx = 0.0;
    for (const DriftPoint& p : result.points) {
      sxy += (std::log(p.t) - mx) * (std::log(p.rms) - my);
      sxx += (std::log(p.t) - mx) * (std::log(p.t) - mx);
    }
    result.slope = sxy / sxx;
  }
  return result;
}

MotionScript parse_motion_script(std::istream& in) {
  MotionScript script;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::string kind;
    if (!(row >> kind)) continue;  // blank or comment-only line

    MotionPhase phase;
    if (kind == "rest") {
      phase.kind = PhaseKind::rest;
    } else if (kind == "accel-pulse") {
      phase.kind = PhaseKind::accel_pulse;
    } else if (kind == "accel-const") {
      phase.kind = PhaseKind::accel_const;
    } else {
      throw ParseError("unknown phase kind '" + kind + "'", line_no);
    }

    double duration, ax, ay, az, roll_deg, pitch_deg, yaw_deg;
    if (!(row >> duration >> ax >> ay >> az >> roll_deg >> pitch_deg >> yaw_deg)) {
      throw ParseError("expected 'kind duration ax ay az roll pitch yaw'", line_no);
    }
    std::string extra;
    if (row >> extra) {
      throw ParseError("trailing data '" + extra + "'", line_no);
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
      throw ParseError("phase duration must be positive", line_no);
    }
    phase.duration_s = duration;
    phase.accel = Vec3(ax, ay, az);
    if (!phase.accel.allFinite()) {
      throw ParseError("acceleration must be finite", line_no);
    }
    phase.attitude_begin = EulerAngles{deg_to_rad(roll_deg), deg_to_rad(pitch_deg),
                                       deg_to_rad(yaw_deg)};
    if (!phase.attitude_begin.finite()) {
      throw ParseError("attitude must be finite", line_no);
    }
    phase.attitude_end = phase.attitude_begin;
    script.phases.push_back(phase);
  }
  if (script.phases.empty()) {
    throw ParseError("script has no phases", line_no == 0 ? 1 : line_no);
  }
  return script;
}

MotionScript load_motion_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open motion script: " + path);
  }
  return parse_motion_script(in);
}

}  // namespace imudr
