#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "imudr/gravity.hpp"

namespace imudr {

/// Stop-detector parameters.
struct DetectorConfig {
  int window_n = 2;         // variance window, samples (>= 2)
  double lambda_v = 0.01;   // variance threshold, (m/s^2)^2
  int lambda_m = 4;         // gap-bridging lookahead, samples (>= 1)

  void validate() const;
};

/// One bit per sample: 1 = effective motion.
using MotionMask = std::vector<std::uint8_t>;

/// Inclusive [begin, end] index range of detected motion. Segment lists
/// are disjoint and strictly increasing.
struct MotionSegment {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t sample_count() const { return end - begin + 1; }
  bool operator==(const MotionSegment&) const = default;
};

/// Resultant (Euclidean) motion acceleration, m/s^2.
double resultant_accel(const NavAccel& am_nav);

/// Sliding sample variance with divisor (n-1) over the trailing
/// `window_n` values; the mean is taken over the same window. Indices
/// before the first full window are 0 (no-motion warm-up). Output
/// length equals input length.
///
/// Evaluated through the pairwise-difference identity
///   var = sum_{j<k} (x_j - x_k)^2 / (n (n-1)),
/// which is cancellation-free and reduces to (x_i - x_{i-1})^2 / 2 at
/// n = 2, bit for bit.
std::vector<double> sliding_variance(const std::vector<double>& series,
                                     int window_n);

/// Bit i is 1 iff variances[i] >= lambda_v (boundary counts as motion).
MotionMask threshold_mask(const std::vector<double>& variances, double lambda_v);

/// Groups a motion mask into segments. Scanning left to right, a set bit
/// opens a segment; from the last motion index reached, the next
/// lambda_m samples are searched and the scan jumps to the last set bit
/// found there; when the lookahead holds no set bit the segment closes
/// at the last motion index. A gap of zeros is therefore bridged iff a
/// set bit occurs within lambda_m samples of the index reached. An
/// isolated set bit yields begin == end.
std::vector<MotionSegment> segment_motion(const MotionMask& mask, int lambda_m);

}  // namespace imudr
