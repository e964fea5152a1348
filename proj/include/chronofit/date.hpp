#pragma once

#include <chrono>
#include <string>

namespace chronofit {

// Calendar dates at daily resolution, stored as days since the Unix epoch.
using Date = std::chrono::sys_days;

// Parses strict ISO-8601 "YYYY-MM-DD". Throws Error(ParseError) on anything
// else, including out-of-range month/day combinations.
Date parse_date(const std::string& text);

std::string format_date(Date d);

inline Date add_days(Date d, int n) { return d + std::chrono::days(n); }

// Signed day count b - a.
inline long day_span(Date a, Date b) {
  return std::chrono::duration_cast<std::chrono::days>(b - a).count();
}

}  // namespace chronofit
