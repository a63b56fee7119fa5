#include "imudr/frames.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "imudr/errors.hpp"

namespace imudr {
namespace {

constexpr double kPi = std::numbers::pi;

// Wrap to (-pi, pi].
double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w = kPi;
  return w;
}

Mat3 rot_x(double a) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  Mat3 r;
  r << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return r;
}

Mat3 rot_y(double a) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  Mat3 r;
  r << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return r;
}

Mat3 rot_z(double a) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  Mat3 r;
  r << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return r;
}

double orthonormality_residual(const Mat3& m) {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace

bool EulerAngles::finite() const {
  return std::isfinite(roll) && std::isfinite(pitch) && std::isfinite(yaw);
}

EulerAngles EulerAngles::normalized() const {
  double r = roll;
  double p = wrap_angle(pitch);
  double y = yaw;
  if (p > kPi / 2.0) {
    p = kPi - p;
    r += kPi;
    y += kPi;
  } else if (p < -kPi / 2.0) {
    p = -kPi - p;
    r += kPi;
    y += kPi;
  }
  return EulerAngles{wrap_angle(r), p, wrap_angle(y)};
}

RotationMatrix RotationMatrix::from_matrix(const Mat3& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("rotation matrix has non-finite entries");
  }
  if (orthonormality_residual(m) > 1e-12) {
    throw std::invalid_argument("matrix is not orthonormal within 1e-12");
  }
  if (std::abs(m.determinant() - 1.0) > 1e-12) {
    throw std::invalid_argument("matrix determinant differs from 1 beyond 1e-12");
  }
  return RotationMatrix(m);
}

RotationMatrix RotationMatrix::from_near_orthonormal(const Mat3& m, double tol) {
  if (!m.allFinite()) {
    throw std::invalid_argument("rotation matrix has non-finite entries");
  }
  if (orthonormality_residual(m) > tol) {
    throw std::invalid_argument("matrix is not orthonormal within ingest tolerance");
  }
  if (std::abs(m.determinant() - 1.0) > tol) {
    throw std::invalid_argument("matrix determinant differs from 1 beyond ingest tolerance");
  }
  // Gram-Schmidt on the rows.
  Mat3 g;
  Vec3 r0 = m.row(0).normalized();
  Vec3 r1 = m.row(1).transpose() - r0 * r0.dot(m.row(1));
  r1.normalize();
  Vec3 r2 = m.row(2).transpose() - r0 * r0.dot(m.row(2)) - r1 * r1.dot(m.row(2));
  r2.normalize();
  g.row(0) = r0;
  g.row(1) = r1;
  g.row(2) = r2;
  return from_matrix(g);
}

RotationMatrix rotation_body_from_inertial(const EulerAngles& e) {
  if (!e.finite()) {
    throw std::invalid_argument("non-finite euler angles");
  }
  const Mat3 body_to_inertial = rot_z(e.yaw) * rot_y(e.pitch) * rot_x(e.roll);
  return RotationMatrix::from_matrix(body_to_inertial.transpose());
}

RotationMatrix compose_body_from_nav(const RotationMatrix& r_bi,
                                     const FrameCalibration& calib) {
  const Mat3 product =
      r_bi.matrix() * calib.r_nav_from_inertial.matrix().transpose();
  return RotationMatrix::from_matrix(product);
}

FrameCalibration parse_calibration(std::istream& in) {
  double v[12];
  for (int i = 0; i < 12; ++i) {
    if (!(in >> v[i])) {
      throw ParseError("calibration needs 12 numbers (9 rotation row-major + 3 origin)", 1);
    }
    if (!std::isfinite(v[i])) {
      throw ParseError("calibration contains a non-finite value", 1);
    }
  }
  double extra;
  if (in >> extra) {
    throw ParseError("calibration has trailing data beyond 12 numbers", 1);
  }
  Mat3 r;
  r << v[0], v[1], v[2],
       v[3], v[4], v[5],
       v[6], v[7], v[8];
  FrameCalibration calib;
  try {
    calib.r_nav_from_inertial = RotationMatrix::from_near_orthonormal(r, 1e-6);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), 1);
  }
  calib.origin_nav = Vec3(v[9], v[10], v[11]);
  return calib;
}

FrameCalibration load_calibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open calibration file: " + path);
  }
  return parse_calibration(in);
}

}  // namespace imudr
