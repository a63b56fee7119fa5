#pragma once

#include <string>

namespace imudr {

/// Shortest decimal string that round-trips the exact double value.
/// Keeps emitted CSVs byte-stable across runs.
std::string format_double(double value);

}  // namespace imudr
