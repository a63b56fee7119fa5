#pragma once

#include <span>
#include <vector>

#include "imudr/gravity.hpp"
#include "imudr/motion_detect.hpp"

namespace imudr {

/// Velocity and displacement in the navigation frame at one instant.
struct TrajectoryState {
  double t = 0.0;          // seconds
  Vec3 v = Vec3::Zero();   // m/s
  Vec3 s = Vec3::Zero();   // m
};

/// Per-sample trajectory plus the motion segments it was built from.
/// Outside every segment v is exactly zero and s holds its last value.
struct TrajectoryEstimate {
  std::vector<TrajectoryState> states;
  std::vector<MotionSegment> segments;
};

/// Rectangular accumulation of the sampled acceleration:
///   v(k) = v(k-1) + a(k) dt,   s(k) = s(k-1) + v(k) dt,
/// velocity updated first and the new velocity used for position. One
/// output state per input sample; state k carries t = (k+1) dt relative
/// to the initial condition. Throws ConfigError for dt <= 0.
std::vector<TrajectoryState> integrate_segment(std::span<const NavAccel> accels,
                                               double dt, const Vec3& v0,
                                               const Vec3& s0);

/// Full-log reconstruction with zero-velocity updates: accelerations are
/// integrated only inside the given segments, each segment starting from
/// v = 0 at the position held when it opens; outside segments v = 0 and
/// s holds. Segments must be in range, disjoint and increasing
/// (std::invalid_argument otherwise).
TrajectoryEstimate reconstruct(std::span<const NavAccel> am_nav,
                               const std::vector<MotionSegment>& segments,
                               double dt, const Vec3& origin);

}  // namespace imudr
