#include "imudr/simulator.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "imudr/errors.hpp"
#include "imudr/integrator.hpp"
#include "imudr/pipeline.hpp"
#include "oracles.hpp"

using namespace imudr;

namespace {

constexpr double kPi = std::numbers::pi;

MotionPhase rest(double duration, const EulerAngles& att = EulerAngles{}) {
  return MotionPhase{PhaseKind::rest, duration, Vec3::Zero(), att, att};
}

MotionPhase pulse(double duration, const Vec3& accel,
                  const EulerAngles& att = EulerAngles{}) {
  return MotionPhase{PhaseKind::accel_pulse, duration, accel, att, att};
}

// Pulse amplitude with a norm the default detector always sees.
Vec3 detectable_amplitude(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(1.0, 3.0);
  Vec3 dir = oracles::random_vec(rng);
  while (dir.norm() < 0.1) dir = oracles::random_vec(rng);
  return dir.normalized() * mag(rng);
}

}  // namespace

TEST_CASE("a single rest phase yields zero motion and constant position") {
  MotionScript script{{rest(1.0)}};
  const auto truth = synth_truth(script, 0.025);
  REQUIRE(truth.size() == 40);
  for (const auto& ts : truth) {
    CHECK(ts.a_m.v == Vec3::Zero());
    CHECK(ts.v == Vec3::Zero());
    CHECK(ts.s == Vec3::Zero());
  }
}

TEST_CASE("constant-acceleration phase reproduces the integrator closed form") {
  MotionScript script;
  script.phases.push_back(MotionPhase{PhaseKind::accel_const, 1.0, Vec3(1, 0, 0),
                                      EulerAngles{}, EulerAngles{}});
  const auto truth = synth_truth(script, 0.01);
  REQUIRE(truth.size() == 100);
  CHECK(truth.back().v.x() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(truth.back().s.x() - 0.505) <= 1e-12);
}

TEST_CASE("pulse phases start and end at rest, every remainder shape") {
  for (std::size_t n_samples : {3u, 4u, 5u, 6u, 7u, 20u}) {
    MotionScript script{{pulse(0.025 * static_cast<double>(n_samples),
                               Vec3(2, -1, 0.5))}};
    const auto truth = synth_truth(script, 0.025);
    REQUIRE(truth.size() == n_samples);
    CHECK(truth.back().v == Vec3::Zero());
    CHECK(truth.back().s != Vec3::Zero());  // the move goes somewhere
  }
}

TEST_CASE("the Table-I-style schedule from millisecond durations") {
  // 2150+175+475+275+325+350+725+125+1425 ms = 6.025 s, 241 samples at 25 ms
  MotionScript script{{rest(2.150), pulse(0.175, Vec3(0, 0, 2)), rest(0.475),
                       pulse(0.275, Vec3(2, 0, 0)), rest(0.325),
                       pulse(0.350, Vec3(0, 2, 0)), rest(0.725),
                       pulse(0.125, Vec3(0, 0, 1)), rest(1.425)}};
  CHECK(script.total_duration() == doctest::Approx(6.025).epsilon(1e-12));
  const auto truth = synth_truth(script, 0.025);
  CHECK(truth.size() == 241);
  CHECK(truth.back().t == doctest::Approx(240 * 0.025).epsilon(1e-12));
}

TEST_CASE("empty script is a config error") {
  CHECK_THROWS_AS(synth_truth(MotionScript{}, 0.025), ConfigError);
}

TEST_CASE("attitude ramps linearly across a phase") {
  MotionScript script;
  script.phases.push_back(MotionPhase{PhaseKind::rest, 0.25, Vec3::Zero(),
                                      EulerAngles{0, 0, 0},
                                      EulerAngles{0.9, 0, -0.9}});
  const auto truth = synth_truth(script, 0.025);
  REQUIRE(truth.size() == 10);
  CHECK(truth.front().attitude.roll == 0.0);
  CHECK(truth.back().attitude.roll == doctest::Approx(0.9));
  CHECK(truth.back().attitude.yaw == doctest::Approx(-0.9));
  for (std::size_t i = 1; i < truth.size(); ++i) {
    CHECK(truth[i].attitude.roll - truth[i - 1].attitude.roll ==
          doctest::Approx(0.1));
  }
}

TEST_CASE("stationary level truth reads gravity with zero angles") {
  MotionScript script{{rest(0.5)}};
  const auto samples =
      synth_imu(synth_truth(script, 0.025), FrameCalibration::identity(), {});
  for (const auto& s : samples) {
    CHECK(s.accel.v == Vec3(0, 0, kStandardGravity));
    CHECK(s.angles.roll == 0.0);
    CHECK(s.angles.pitch == 0.0);
    CHECK(s.angles.yaw == 0.0);
  }
}

TEST_CASE("stationary truth at pitch pi/2 reads gravity on body -x") {
  MotionScript script{{rest(0.5, EulerAngles{0, kPi / 2, 0})}};
  const auto samples =
      synth_imu(synth_truth(script, 0.025), FrameCalibration::identity(), {});
  for (const auto& s : samples) {
    CHECK(s.accel.v.x() == doctest::Approx(-kStandardGravity).epsilon(1e-14));
    CHECK(std::abs(s.accel.v.y()) < 1e-12);
    CHECK(std::abs(s.accel.v.z()) < 1e-12);
  }
}

TEST_CASE("noiseless stationary samples keep the gravity norm at any attitude") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 20; ++i) {
    MotionScript script{{rest(0.25, oracles::random_angles(rng))}};
    const auto samples =
        synth_imu(synth_truth(script, 0.025), FrameCalibration::identity(), {});
    for (const auto& s : samples) {
      CHECK(std::abs(s.accel.v.norm() - kStandardGravity) <= 1e-12);
    }
  }
}

TEST_CASE("identical seeds give bit-identical streams") {
  MotionScript script{{rest(0.5), pulse(0.5, Vec3(1, 0, 0)), rest(0.5)}};
  NoiseModel noise;
  noise.accel_white_noise_std = 0.05;
  noise.orientation_error_std = 0.01;
  noise.seed = 1234;
  const auto truth = synth_truth(script, 0.025);
  const auto a = synth_imu(truth, FrameCalibration::identity(), noise);
  const auto b = synth_imu(truth, FrameCalibration::identity(), noise);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].accel.v == b[i].accel.v);
    CHECK(a[i].angles.roll == b[i].angles.roll);
    CHECK(a[i].angles.pitch == b[i].angles.pitch);
    CHECK(a[i].angles.yaw == b[i].angles.yaw);
  }
  NoiseModel other = noise;
  other.seed = 1235;
  const auto c = synth_imu(truth, FrameCalibration::identity(), other);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].accel.v != c[i].accel.v) all_equal = false;
  }
  CHECK(!all_equal);
}

TEST_CASE("noiseless closure: pipeline inverts the simulator exactly") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    MotionScript script;
    script.phases.push_back(rest(0.5, oracles::random_angles(rng)));
    const int moves = 1 + trial % 3;
    for (int m = 0; m < moves; ++m) {
      script.phases.push_back(pulse(0.25 + 0.05 * m, detectable_amplitude(rng),
                                    oracles::random_angles(rng)));
      script.phases.push_back(rest(0.4, oracles::random_angles(rng)));
    }
    FrameCalibration calib;
    calib.r_nav_from_inertial = oracles::random_rotation(rng);
    calib.origin_nav = oracles::random_vec(rng, 2.0);

    const auto truth = synth_truth(script, 0.025);
    const auto samples = synth_imu(truth, calib, {});

    RunConfig config;
    config.calibration = calib;
    config.dt_override = 0.025;
    const auto result = run_pipeline(samples, config);
    double worst = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      const Vec3 err =
          result.estimate.states[i].s - (calib.origin_nav + truth[i].s);
      worst = std::max(worst, err.norm());
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("drift: zero noise reports no slope") {
  const auto result = drift_experiment(NoiseModel{}, 5.0, 10, 0.025);
  CHECK(!result.slope.has_value());
  for (const auto& p : result.points) CHECK(p.rms == 0.0);
}

TEST_CASE("drift: white accel noise grows close to t^1.5") {
  NoiseModel noise;
  noise.accel_white_noise_std = 0.01;
  noise.seed = 42;
  const auto result = drift_experiment(noise, 20.0, 30, 0.025);
  REQUIRE(result.slope.has_value());
  CHECK(*result.slope > 1.2);
  CHECK(*result.slope < 1.8);
}

TEST_CASE("drift: doubling the noise doubles the error curve") {
  NoiseModel noise;
  noise.accel_white_noise_std = 0.01;
  noise.seed = 7;
  NoiseModel doubled = noise;
  doubled.accel_white_noise_std = 0.02;
  const auto a = drift_experiment(noise, 10.0, 20, 0.025);
  const auto b = drift_experiment(doubled, 10.0, 20, 0.025);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(b.points[i].rms == doctest::Approx(2.0 * a.points[i].rms).epsilon(0.1));
  }
}

TEST_CASE("drift rejects too few trials") {
  NoiseModel noise;
  noise.accel_white_noise_std = 0.01;
  CHECK_THROWS_AS(drift_experiment(noise, 10.0, 5, 0.025), ConfigError);
}

TEST_CASE("motion script parsing") {
  SUBCASE("phases, comments and units") {
    std::istringstream in(
        "# pick and place\n"
        "rest 2.0 0 0 0 0 0 0\n"
        "accel-pulse 0.5 2 0 0 0 0 90\n"
        "\n"
        "accel-const 0.25 0 1 0 10 0 0  # ramp\n");
    const MotionScript script = parse_motion_script(in);
    REQUIRE(script.phases.size() == 3);
    CHECK(script.phases[0].kind == PhaseKind::rest);
    CHECK(script.phases[1].kind == PhaseKind::accel_pulse);
    CHECK(script.phases[1].accel == Vec3(2, 0, 0));
    CHECK(script.phases[1].attitude_begin.yaw == doctest::Approx(kPi / 2));
    CHECK(script.phases[2].kind == PhaseKind::accel_const);
    CHECK(script.phases[2].attitude_begin.roll ==
          doctest::Approx(deg_to_rad(10.0)));
  }
  SUBCASE("unknown kind names the line") {
    std::istringstream in("rest 1 0 0 0 0 0 0\nwiggle 1 0 0 0 0 0 0\n");
    try {
      parse_motion_script(in);
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line() == 2);
    }
  }
  SUBCASE("missing fields are rejected") {
    std::istringstream in("rest 1 0 0\n");
    CHECK_THROWS_AS(parse_motion_script(in), ParseError);
  }
  SUBCASE("empty script is rejected") {
    std::istringstream in("# nothing here\n");
    CHECK_THROWS_AS(parse_motion_script(in), ParseError);
  }
}
