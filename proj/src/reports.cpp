#include "imudr/reports.hpp"

#include <filesystem>
#include <fstream>
#include <limits>

#include "imudr/errors.hpp"
#include "imudr/format.hpp"

namespace imudr {
namespace {

namespace fs = std::filesystem;

std::ofstream open_report(const fs::path& dir, const std::string& name) {
  std::ofstream out(dir / name);
  if (!out) {
    throw IoError("cannot write " + (dir / name).string());
  }
  return out;
}

fs::path ensure_dir(const std::string& out_dir) {
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory: " + out_dir);
  }
  return dir;
}

}  // namespace

void emit_reports(const PipelineResult& result, const std::string& out_dir) {
  const fs::path dir = ensure_dir(out_dir);
  const auto& states = result.estimate.states;

  {
    auto out = open_report(dir, "trajectory.csv");
    out << "t_s,sx,sy,sz,vx,vy,vz\n";
    for (const TrajectoryState& st : states) {
      out << format_double(st.t) << ',' << format_double(st.s.x()) << ','
          << format_double(st.s.y()) << ',' << format_double(st.s.z()) << ','
          << format_double(st.v.x()) << ',' << format_double(st.v.y()) << ','
          << format_double(st.v.z()) << '\n';
    }
  }
  {
    auto out = open_report(dir, "diagnostics.csv");
    out << "t_s,a_mr,variance,mask\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      out << format_double(states[i].t) << ','
          << format_double(result.diagnostics.a_mr[i]) << ','
          << format_double(result.diagnostics.variance[i]) << ','
          << int(result.diagnostics.mask[i]) << '\n';
    }
  }
  {
    auto out = open_report(dir, "segments.csv");
    out << "begin,end,t_begin,t_end,duration_ms\n";
    for (const MotionSegment& seg : result.segments) {
      const double t_begin = states[seg.begin].t;
      const double t_end = states[seg.end].t;
      out << seg.begin << ',' << seg.end << ',' << format_double(t_begin) << ','
          << format_double(t_end) << ','
          << format_double((t_end - t_begin) * 1000.0) << '\n';
    }
  }
  {
    auto out = open_report(dir, "summary.txt");
    if (states.empty()) {
      out << "samples: 0\n";
      return;
    }
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    for (const TrajectoryState& st : states) {
      lo = lo.cwiseMin(st.s);
      hi = hi.cwiseMax(st.s);
    }
    const TrajectoryState& last = states.back();
    out << "samples: " << states.size() << '\n';
    out << "dt_s: " << format_double(result.dt) << '\n';
    out << "motion_segments: " << result.segments.size() << '\n';
    out << "final_displacement_m: " << format_double(last.s.x()) << ' '
        << format_double(last.s.y()) << ' ' << format_double(last.s.z()) << '\n';
    out << "final_displacement_norm_m: " << format_double(last.s.norm()) << '\n';
    out << "extent_x_m: " << format_double(lo.x()) << ' ' << format_double(hi.x())
        << '\n';
    out << "extent_y_m: " << format_double(lo.y()) << ' ' << format_double(hi.y())
        << '\n';
    out << "extent_z_m: " << format_double(lo.z()) << ' ' << format_double(hi.z())
        << '\n';
  }
}

void emit_drift_report(const DriftResult& result, const std::string& out_dir) {
  const fs::path dir = ensure_dir(out_dir);
  auto out = open_report(dir, "drift.csv");
  out << "t_s,rms_m\n";
  for (const DriftPoint& p : result.points) {
    out << format_double(p.t) << ',' << format_double(p.rms) << '\n';
  }
  auto summary = open_report(dir, "drift_summary.txt");
  summary << "points: " << result.points.size() << '\n';
  summary << "slope: " << (result.slope ? format_double(*result.slope) : "n/a")
          << '\n';
}

}  // namespace imudr
