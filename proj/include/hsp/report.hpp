#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hsp/combinatorics.hpp"

namespace hsp {

inline constexpr const char* kToolVersion = "1.0.0";

// Rounds to 12 significant digits so serialized floats are stable.
double sig12(long double x);
std::string format_sig12(long double x);

// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json big_json(const Integer& x);
// "p/q" (or "p" when integral).
std::string rational_string(const Rational& r);

// UTC ISO-8601; SOURCE_DATE_EPOCH overrides the clock when set.
std::string report_timestamp();

// {tool_version, seed, group_spec, timestamp}
nlohmann::json report_header(std::uint64_t seed, const std::string& group_spec);

}  // namespace hsp
