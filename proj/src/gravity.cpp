#include "imudr/gravity.hpp"

#include <stdexcept>

namespace imudr {

BodyAccel gravity_in_body(const EulerAngles& e, const GravityModel& gm) {
  if (gm.g_magnitude <= 0.0) {
    throw std::invalid_argument("gravity magnitude must be positive");
  }
  const RotationMatrix r_bi = rotation_body_from_inertial(e);
  return BodyAccel(r_bi.rotate(gm.g_inertial()));
}

BodyAccel motion_accel_body(const BodyAccel& raw, const EulerAngles& e,
                            const GravityModel& gm) {
  if (!raw.finite()) {
    throw std::invalid_argument("non-finite accelerometer reading");
  }
  return BodyAccel(raw.v - gravity_in_body(e, gm).v);
}

NavAccel motion_accel_nav(const BodyAccel& am_body, const EulerAngles& e,
                          const FrameCalibration& calib) {
  if (!am_body.finite()) {
    throw std::invalid_argument("non-finite body-frame acceleration");
  }
  const RotationMatrix r_bn =
      compose_body_from_nav(rotation_body_from_inertial(e), calib);
  return NavAccel(r_bn.matrix().transpose() * am_body.v);
}

}  // namespace imudr
