#include "imudr/imu_log.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "imudr/errors.hpp"
#include "imudr/format.hpp"

namespace imudr {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_number(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end || field.empty()) {
    throw ParseError("not a number: '" + field + "'", line_no);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite value: '" + field + "'", line_no);
  }
  return value;
}

}  // namespace

double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

std::vector<ImuSample> parse_imu_log(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError("empty log: missing header", 1);
  }
  ++line_no;
  if (trim(line) != kImuLogHeader) {
    throw ParseError(std::string("bad header, expected '") + kImuLogHeader + "'",
                     line_no);
  }

  std::vector<ImuSample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 7) {
      throw ParseError("expected 7 fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    ImuSample s;
    s.t = parse_number(fields[0], line_no);
    s.accel = BodyAccel(parse_number(fields[1], line_no),
                        parse_number(fields[2], line_no),
                        parse_number(fields[3], line_no));
    s.angles.roll = deg_to_rad(parse_number(fields[4], line_no));
    s.angles.pitch = deg_to_rad(parse_number(fields[5], line_no));
    s.angles.yaw = deg_to_rad(parse_number(fields[6], line_no));
    if (!samples.empty() && s.t <= samples.back().t) {
      throw ParseError("timestamp not strictly increasing", line_no);
    }
    samples.push_back(s);
  }
  return samples;
}

std::vector<ImuSample> parse_imu_log_text(const std::string& text) {
  std::istringstream in(text);
  return parse_imu_log(in);
}

std::vector<ImuSample> load_imu_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open IMU log: " + path);
  }
  return parse_imu_log(in);
}

void write_imu_log(std::ostream& out, const std::vector<ImuSample>& samples) {
  out << kImuLogHeader << '\n';
  for (const ImuSample& s : samples) {
    out << format_double(s.t) << ',' << format_double(s.accel.v.x()) << ','
        << format_double(s.accel.v.y()) << ',' << format_double(s.accel.v.z())
        << ',' << format_double(rad_to_deg(s.angles.roll)) << ','
        << format_double(rad_to_deg(s.angles.pitch)) << ','
        << format_double(rad_to_deg(s.angles.yaw)) << '\n';
  }
}

void save_imu_log(const std::string& path, const std::vector<ImuSample>& samples) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write IMU log: " + path);
  }
  write_imu_log(out, samples);
}

double infer_dt(const std::vector<ImuSample>& samples) {
  if (samples.size() < 2) {
    throw ConfigError("need at least 2 samples to infer dt");
  }
  std::vector<double> gaps;
  gaps.reserve(samples.size() - 1);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    gaps.push_back(samples[i].t - samples[i - 1].t);
  }
  std::vector<double> sorted = gaps;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                   sorted.end());
  const double median = sorted[sorted.size() / 2];
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (std::abs(gaps[i] - median) > 0.1 * median) {
      throw ConfigError("timestamp jitter beyond 10% of the median gap near sample " +
                        std::to_string(i + 1));
    }
  }
  return median;
}

}  // namespace imudr
