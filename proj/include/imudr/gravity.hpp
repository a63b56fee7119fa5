#pragma once

#include "imudr/frames.hpp"

namespace imudr {

constexpr double kStandardGravity = 9.80665;  // m/s^2

/// Coordinate frame an acceleration is expressed in.
enum class Frame { body, inertial, nav };

/// Acceleration tagged at compile time with its frame, m/s^2.
template <Frame F>
struct Accel {
  Vec3 v = Vec3::Zero();

  Accel() = default;
  explicit Accel(const Vec3& vec) : v(vec) {}
  Accel(double x, double y, double z) : v(x, y, z) {}

  bool finite() const { return v.allFinite(); }
};

using BodyAccel = Accel<Frame::body>;
using InertialAccel = Accel<Frame::inertial>;
using NavAccel = Accel<Frame::nav>;

/// Local gravity. The inertial z axis points up, away from the Earth's
/// center, and a resting accelerometer at level attitude reads +g on
/// body z; the same convention drives the simulator, so round trips
/// cancel exactly.
struct GravityModel {
  double g_magnitude = kStandardGravity;

  Vec3 g_inertial() const { return Vec3(0.0, 0.0, g_magnitude); }
};

/// Gravity reading expressed in the body frame at attitude `e`:
/// r_body_from_inertial(e) * (0, 0, g). Norm equals g_magnitude.
BodyAccel gravity_in_body(const EulerAngles& e, const GravityModel& gm);

/// Motion component of a raw body-frame accelerometer reading:
/// raw - gravity_in_body(e, gm). Exact arithmetic, no filtering; the
/// sensor-error term is assumed zero here (noise lives in the simulator).
BodyAccel motion_accel_body(const BodyAccel& raw, const EulerAngles& e,
                            const GravityModel& gm);

/// Motion acceleration projected into the navigation frame:
/// (r_body_from_nav)^T * am_body with r_body_from_nav composed from the
/// attitude and the calibration transform. Norm-preserving.
NavAccel motion_accel_nav(const BodyAccel& am_body, const EulerAngles& e,
                          const FrameCalibration& calib);

}  // namespace imudr
