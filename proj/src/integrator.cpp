#include "imudr/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "imudr/errors.hpp"

namespace imudr {

std::vector<TrajectoryState> integrate_segment(std::span<const NavAccel> accels,
                                               double dt, const Vec3& v0,
                                               const Vec3& s0) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("integration step dt must be positive");
  }
  std::vector<TrajectoryState> states;
  states.reserve(accels.size());
  Vec3 v = v0;
  Vec3 s = s0;
  for (std::size_t k = 0; k < accels.size(); ++k) {
    if (!accels[k].finite()) {
      throw std::invalid_argument("non-finite acceleration in segment");
    }
    v += accels[k].v * dt;
    s += v * dt;
    states.push_back(TrajectoryState{static_cast<double>(k + 1) * dt, v, s});
  }
  return states;
}

TrajectoryEstimate reconstruct(std::span<const NavAccel> am_nav,
                               const std::vector<MotionSegment>& segments,
                               double dt, const Vec3& origin) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("integration step dt must be positive");
  }
  const std::size_t n = am_nav.size();
  std::size_t last_end = 0;
  bool have_prev = false;
  for (const MotionSegment& seg : segments) {
    if (seg.begin > seg.end || seg.end >= n) {
      throw std::invalid_argument("motion segment out of range");
    }
    if (have_prev && seg.begin <= last_end) {
      throw std::invalid_argument("motion segments overlap or are unordered");
    }
    last_end = seg.end;
    have_prev = true;
  }

  TrajectoryEstimate estimate;
  estimate.segments = segments;
  estimate.states.resize(n);

  Vec3 held = origin;
  std::size_t next = 0;  // index of the next segment to enter
  for (std::size_t i = 0; i < n; ++i) {
    TrajectoryState& st = estimate.states[i];
    st.t = static_cast<double>(i) * dt;
    if (next < segments.size() && i == segments[next].begin) {
      // Zero-velocity update: the segment integrates from rest at the
      // held position, keeping s continuous across the boundary.
      const MotionSegment& seg = segments[next];
      const auto inside = integrate_segment(
          am_nav.subspan(seg.begin, seg.sample_count()), dt, Vec3::Zero(), held);
      for (std::size_t k = 0; k < inside.size(); ++k) {
        TrajectoryState& dst = estimate.states[seg.begin + k];
        dst.t = static_cast<double>(seg.begin + k) * dt;
        dst.v = inside[k].v;
        dst.s = inside[k].s;
      }
      held = inside.back().s;
      i = seg.end;
      ++next;
    } else {
      st.v = Vec3::Zero();
      st.s = held;
    }
  }
  return estimate;
}

}  // namespace imudr
