#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace imudr {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Attitude as intrinsic Z-Y-X Euler angles (yaw, then pitch, then roll),
/// all in radians. Body-to-inertial is Rz(yaw)*Ry(pitch)*Rx(roll).
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;

  bool finite() const;

  /// Equivalent attitude with pitch folded into [-pi/2, pi/2] and all
  /// angles wrapped to (-pi, pi]. Represents the same rotation.
  EulerAngles normalized() const;
};

/// Orthonormal 3x3 rotation with det +1. Construction validates the
/// invariants (orthonormality and determinant within 1e-12).
class RotationMatrix {
 public:
  RotationMatrix() : m_(Mat3::Identity()) {}

  /// Wraps a matrix that is already a rotation. Throws
  /// std::invalid_argument if RtR deviates from I, or det from 1,
  /// by more than 1e-12.
  static RotationMatrix from_matrix(const Mat3& m);

  /// Ingest path for file data: accepts matrices within `tol` of
  /// orthonormal (and of det +1), re-orthonormalizes by Gram-Schmidt
  /// on the rows, and rejects anything worse.
  static RotationMatrix from_near_orthonormal(const Mat3& m, double tol = 1e-6);

  const Mat3& matrix() const { return m_; }
  RotationMatrix transposed() const { return RotationMatrix(m_.transpose()); }
  Vec3 rotate(const Vec3& v) const { return m_ * v; }

 private:
  explicit RotationMatrix(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

/// Transform tying the inertial frame to the navigation (task) frame,
/// produced by an external calibration procedure and consumed from file.
struct FrameCalibration {
  RotationMatrix r_nav_from_inertial;  // maps {I} vectors into {N}
  Vec3 origin_nav = Vec3::Zero();      // initial device position in {N}, meters

  static FrameCalibration identity() { return FrameCalibration{}; }
};

/// Inertial-to-body rotation for the given attitude: the transpose of
/// body-to-inertial Rz(yaw)*Ry(pitch)*Rx(roll).
/// Throws std::invalid_argument on non-finite angles.
RotationMatrix rotation_body_from_inertial(const EulerAngles& e);

/// Nav-to-body rotation: r_bi * r_nav_from_inertial^T.
RotationMatrix compose_body_from_nav(const RotationMatrix& r_bi,
                                     const FrameCalibration& calib);

/// Calibration file: nine rotation entries row-major followed by three
/// origin entries, whitespace-separated. Rotations within 1e-6 of
/// orthonormal are re-orthonormalized; worse ones are rejected.
FrameCalibration parse_calibration(std::istream& in);
FrameCalibration load_calibration(const std::string& path);

}  // namespace imudr
