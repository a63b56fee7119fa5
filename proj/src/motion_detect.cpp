#include "imudr/motion_detect.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "imudr/errors.hpp"

namespace imudr {

void DetectorConfig::validate() const {
  if (window_n < 2) {
    throw ConfigError("window_n must be >= 2, got " + std::to_string(window_n));
  }
  if (!(lambda_v > 0.0) || !std::isfinite(lambda_v)) {
    throw ConfigError("lambda_v must be positive and finite");
  }
  if (lambda_m < 1) {
    throw ConfigError("lambda_m must be >= 1, got " + std::to_string(lambda_m));
  }
}

double resultant_accel(const NavAccel& am_nav) {
  if (!am_nav.finite()) {
    throw std::invalid_argument("non-finite acceleration");
  }
  return am_nav.v.norm();
}

std::vector<double> sliding_variance(const std::vector<double>& series,
                                     int window_n) {
  if (window_n < 2) {
    throw ConfigError("variance window must be >= 2, got " +
                      std::to_string(window_n));
  }
  if (series.size() < static_cast<std::size_t>(window_n)) {
    throw ConfigError("series shorter than the variance window");
  }
  const std::size_t n = static_cast<std::size_t>(window_n);
  std::vector<double> out(series.size(), 0.0);
  const double divisor = static_cast<double>(n) * static_cast<double>(n - 1);
  for (std::size_t i = n - 1; i < series.size(); ++i) {
    const std::size_t first = i - (n - 1);
    double sum = 0.0;
    for (std::size_t j = first; j <= i; ++j) {
      for (std::size_t k = j + 1; k <= i; ++k) {
        const double d = series[j] - series[k];
        sum += d * d;
      }
    }
    out[i] = sum / divisor;
  }
  return out;
}

MotionMask threshold_mask(const std::vector<double>& variances, double lambda_v) {
  MotionMask mask(variances.size(), 0);
  for (std::size_t i = 0; i < variances.size(); ++i) {
    mask[i] = variances[i] >= lambda_v ? 1 : 0;
  }
  return mask;
}

std::vector<MotionSegment> segment_motion(const MotionMask& mask, int lambda_m) {
  if (lambda_m < 1) {
    throw std::invalid_argument("lambda_m must be >= 1");
  }
  std::vector<MotionSegment> segments;
  const std::size_t n = mask.size();
  const std::size_t look = static_cast<std::size_t>(lambda_m);
  std::size_t i = 0;
  while (i < n) {
    if (!mask[i]) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    std::size_t reached = i;
    for (;;) {
      // Last set bit within the next lambda_m samples, if any.
      std::size_t updated = reached;
      for (std::size_t j = 1; j <= look && reached + j < n; ++j) {
        if (mask[reached + j]) updated = reached + j;
      }
      if (updated == reached) break;
      reached = updated;
    }
    segments.push_back(MotionSegment{begin, reached});
    i = reached + 1;
  }
  return segments;
}

}  // namespace imudr
