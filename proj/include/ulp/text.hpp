#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ulp {

/// Shortest decimal text that round-trips, e.g. 14 -> "14", 0.1 -> "0.1".
std::string format_shortest(double value);

/// Scientific notation with at most `significant` digits and no padding:
/// 0.15 -> "1.5e-1", 0.000123456 -> "1.23e-4", 0 -> "0e0".
std::string format_scientific(double value, int significant = 3);

/// Strict full-string parses; malformed text throws ConfigError naming `what`.
double parse_double(std::string_view text, std::string_view what);
unsigned long long parse_unsigned(std::string_view text, std::string_view what);

std::string_view trim(std::string_view text) noexcept;

/// Splits on `sep`, trimming each piece; empty input gives an empty list.
std::vector<std::string> split(std::string_view text, char sep);

}  // namespace ulp
