#include "hsp/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <sstream>

namespace hsp {

double sig12(long double x) {
  if (!std::isfinite(x)) return static_cast<double>(x);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return std::strtod(buf, nullptr);
}

std::string format_sig12(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return buf;
}

nlohmann::json big_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::string report_timestamp() {
  std::time_t t;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env && *env) {
    t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json report_header(std::uint64_t seed, const std::string& group_spec) {
  return {{"tool_version", kToolVersion}, {"seed", seed}, {"group_spec", group_spec}, {"timestamp", report_timestamp()}};
}

}  // namespace hsp
