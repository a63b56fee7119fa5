#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "imudr/frames.hpp"
#include "imudr/gravity.hpp"

namespace imudr {

/// One timestamped MIMU reading: raw body-frame acceleration plus the
/// orientation estimated on the device. Angles are radians in memory;
/// the log format carries degrees.
struct ImuSample {
  double t = 0.0;      // seconds, strictly increasing within a log
  BodyAccel accel;     // raw reading, motion + gravity
  EulerAngles angles;  // estimated attitude
};

inline constexpr const char* kImuLogHeader =
    "t_s,ax,ay,az,roll_deg,pitch_deg,yaw_deg";

/// Parses the CSV log format (header above, SI units, degrees for
/// angles). Throws ParseError naming the offending line for a bad
/// header, wrong field count, non-numeric or non-finite values, and
/// non-monotonic timestamps; an empty input is an error.
std::vector<ImuSample> parse_imu_log(std::istream& in);
std::vector<ImuSample> parse_imu_log_text(const std::string& text);
std::vector<ImuSample> load_imu_log(const std::string& path);

void write_imu_log(std::ostream& out, const std::vector<ImuSample>& samples);
void save_imu_log(const std::string& path, const std::vector<ImuSample>& samples);

/// Fixed sampling period from timestamps: the median inter-sample gap.
/// Every gap must lie within 10% of the median (ConfigError otherwise;
/// the integration recurrences assume constant dt). Needs >= 2 samples.
double infer_dt(const std::vector<ImuSample>& samples);

double deg_to_rad(double deg);
double rad_to_deg(double rad);

}  // namespace imudr
