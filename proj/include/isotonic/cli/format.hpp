#pragma once

#include <string>

// Locale-independent number formatting for CSV output.

namespace isotonic::cli {

/// Fixed point with `decimals` digits after the point.
std::string fixed(double v, int decimals = 7);
/// `digits` significant digits, shortest of fixed/scientific.
std::string significant(double v, int digits = 12);
/// Scientific with `digits` digits after the point.
std::string scientific(double v, int digits = 3);

}  // namespace isotonic::cli
