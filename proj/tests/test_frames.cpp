#include "imudr/frames.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "imudr/errors.hpp"
#include "oracles.hpp"

using namespace imudr;

namespace {
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const Mat3& a, const Mat3& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("zero attitude gives exactly the identity") {
  const Mat3 r = rotation_body_from_inertial(EulerAngles{0, 0, 0}).matrix();
  CHECK(r == Mat3::Identity());
}

TEST_CASE("pure yaw of pi/2, evaluated against Rz(pi/2) transposed") {
  // Rz(pi/2)^T maps the inertial x axis onto body -y.
  const Mat3 r =
      rotation_body_from_inertial(EulerAngles{0, 0, kPi / 2}).matrix();
  Mat3 expected;
  expected << 0, 1, 0,
             -1, 0, 0,
              0, 0, 1;
  CHECK(max_abs_diff(r, expected) < 1e-15);
  const Vec3 mapped = r * Vec3(1, 0, 0);
  CHECK(mapped.x() == doctest::Approx(0).epsilon(1e-12));
  CHECK(mapped.y() == doctest::Approx(-1).epsilon(1e-12));
}

TEST_CASE("pure roll of pi flips the z axis") {
  const RotationMatrix r = rotation_body_from_inertial(EulerAngles{kPi, 0, 0});
  const Vec3 v = r.rotate(Vec3(0, 0, 1));
  CHECK(std::abs(v.x()) < 1e-12);
  CHECK(std::abs(v.y()) < 1e-12);
  CHECK(v.z() == doctest::Approx(-1).epsilon(1e-14));
}

TEST_CASE("random attitudes produce orthonormal matrices with det 1") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Mat3 r = oracles::random_rotation(rng).matrix();
    CHECK(max_abs_diff(r.transpose() * r, Mat3::Identity()) <= 1e-12);
    CHECK(std::abs(r.determinant() - 1.0) <= 1e-12);
  }
}

TEST_CASE("rotation preserves vector norm") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const RotationMatrix r = oracles::random_rotation(rng);
    const Vec3 v = oracles::random_vec(rng, 10.0);
    CHECK(std::abs(r.rotate(v).norm() - v.norm()) <= 1e-12 * (1.0 + v.norm()));
  }
}

TEST_CASE("non-finite angles are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(rotation_body_from_inertial(EulerAngles{nan, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation_body_from_inertial(EulerAngles{0, inf, 0}),
                  std::invalid_argument);
}

TEST_CASE("normalization folds pitch without changing the rotation") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  for (int i = 0; i < 300; ++i) {
    const EulerAngles e{wide(rng), wide(rng), wide(rng)};
    const EulerAngles n = e.normalized();
    CHECK(std::abs(n.pitch) <= kPi / 2 + 1e-12);
    CHECK(std::abs(n.roll) <= kPi + 1e-12);
    CHECK(std::abs(n.yaw) <= kPi + 1e-12);
    const Mat3 a = rotation_body_from_inertial(e).matrix();
    const Mat3 b = rotation_body_from_inertial(n).matrix();
    CHECK(max_abs_diff(a, b) < 1e-9);
  }
}

TEST_CASE("gimbal-edge pitch is accepted") {
  const Mat3 r =
      rotation_body_from_inertial(EulerAngles{0, kPi / 2, 0}).matrix();
  CHECK(max_abs_diff(r.transpose() * r, Mat3::Identity()) <= 1e-12);
}

TEST_CASE("compose with identity calibration returns its argument") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const RotationMatrix r = oracles::random_rotation(rng);
    const RotationMatrix composed =
        compose_body_from_nav(r, FrameCalibration::identity());
    CHECK(composed.matrix() == r.matrix());
  }
}

TEST_CASE("compose cancels when attitude equals the calibration rotation") {
  std::mt19937_64 rng(19);
  const RotationMatrix r = oracles::random_rotation(rng);
  FrameCalibration calib;
  calib.r_nav_from_inertial = r;
  const Mat3 composed = compose_body_from_nav(r, calib).matrix();
  CHECK(max_abs_diff(composed, Mat3::Identity()) < 1e-14);
}

TEST_CASE("compose agrees with a loop-based matrix multiply") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const RotationMatrix a = oracles::random_rotation(rng);
    const RotationMatrix b = oracles::random_rotation(rng);
    FrameCalibration calib;
    calib.r_nav_from_inertial = b;
    const Mat3 composed = compose_body_from_nav(a, calib).matrix();
    const Mat3 expected =
        oracles::multiply_loops(a.matrix(), b.matrix().transpose());
    CHECK(max_abs_diff(composed, expected) < 1e-14);
  }
}

TEST_CASE("from_matrix rejects non-rotations") {
  Mat3 scaled = Mat3::Identity() * 1.001;
  CHECK_THROWS_AS(RotationMatrix::from_matrix(scaled), std::invalid_argument);
  Mat3 reflection = Mat3::Identity();
  reflection(2, 2) = -1.0;  // orthonormal but det -1
  CHECK_THROWS_AS(RotationMatrix::from_matrix(reflection), std::invalid_argument);
}

TEST_CASE("calibration parsing") {
  SUBCASE("identity record round-trips") {
    std::istringstream in("1 0 0 0 1 0 0 0 1  0.5 -0.25 2");
    const FrameCalibration calib = parse_calibration(in);
    CHECK(calib.r_nav_from_inertial.matrix() == Mat3::Identity());
    CHECK(calib.origin_nav == Vec3(0.5, -0.25, 2));
  }
  SUBCASE("near-orthonormal input is re-orthonormalized") {
    std::mt19937_64 rng(29);
    const Mat3 r = oracles::random_rotation(rng).matrix();
    Mat3 perturbed = r;
    perturbed(0, 1) += 3e-7;
    perturbed(2, 0) -= 2e-7;
    std::ostringstream full;
    full.precision(17);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) full << perturbed(i, j) << ' ';
    full << "0 0 0";
    std::istringstream in(full.str());
    const FrameCalibration calib = parse_calibration(in);
    const Mat3 g = calib.r_nav_from_inertial.matrix();
    CHECK(max_abs_diff(g.transpose() * g, Mat3::Identity()) <= 1e-12);
    CHECK(max_abs_diff(g, r) < 1e-5);
  }
  SUBCASE("clearly non-orthonormal rotation is rejected") {
    std::istringstream in("1 0 0 0 1 0 0 0 2  0 0 0");
    CHECK_THROWS_AS(parse_calibration(in), ParseError);
  }
  SUBCASE("short record is rejected") {
    std::istringstream in("1 0 0 0 1 0 0 0 1");
    CHECK_THROWS_AS(parse_calibration(in), ParseError);
  }
  SUBCASE("trailing garbage is rejected") {
    std::istringstream in("1 0 0 0 1 0 0 0 1 0 0 0 99");
    CHECK_THROWS_AS(parse_calibration(in), ParseError);
  }
}
