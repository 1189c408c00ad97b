#include "isotonic/cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace isotonic::cli {

namespace {

std::string to_text(double v, std::chars_format fmt, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
    return {buf.data(), res.ptr};
}

}  // namespace

std::string fixed(double v, int decimals) {
    std::string s = to_text(v, std::chars_format::fixed, decimals);
    // a value that rounds to zero prints without a sign
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string significant(double v, int digits) { return to_text(v, std::chars_format::general, digits); }

std::string scientific(double v, int digits) { return to_text(v, std::chars_format::scientific, digits); }

}  // namespace isotonic::cli
