#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rfs {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Strict parsers; throw ConfigInvalid on malformed input.
double parse_double(std::string_view text);
long long parse_int(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace rfs
