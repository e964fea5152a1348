#include "chronofit/date.hpp"

#include <cctype>
#include <cstdio>

#include "chronofit/error.hpp"

namespace chronofit {

Date parse_date(const std::string& text) {
  // Expected layout: YYYY-MM-DD (4-2-2 digits). GCC's libstdc++ in this
  // toolchain lacks std::chrono::parse, so validate by hand.
  auto fail = [&]() -> Date {
    throw Error(errc::ParseError, "expected ISO date YYYY-MM-DD, got '" + text + "'");
  };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') fail();
  for (int i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
  }
  int y = std::stoi(text.substr(0, 4));
  unsigned mo = static_cast<unsigned>(std::stoi(text.substr(5, 2)));
  unsigned da = static_cast<unsigned>(std::stoi(text.substr(8, 2)));
  std::chrono::year_month_day ymd{std::chrono::year(y), std::chrono::month(mo),
                                  std::chrono::day(da)};
  if (!ymd.ok()) fail();
  return std::chrono::sys_days(ymd);
}

std::string format_date(Date d) {
  std::chrono::year_month_day ymd(d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace chronofit
