#include <doctest.h>

#include <functional>
#include <limits>
#include <vector>

#include "chronofit/date.hpp"
#include "chronofit/error.hpp"
#include "chronofit/series.hpp"
#include "support.hpp"

using namespace chronofit;
using testsupport::make_series;
using testsupport::throws_code;

TEST_SUITE("dates") {
  TEST_CASE("parse and format round-trip") {
    CHECK(format_date(parse_date("2024-01-01")) == "2024-01-01");
    CHECK(format_date(parse_date("1999-12-31")) == "1999-12-31");
    CHECK(format_date(parse_date("2024-02-29")) == "2024-02-29");  // leap day
  }

  TEST_CASE("parse rejects malformed text") {
    CHECK(throws_code(errc::ParseError, [] { parse_date("2024/01/01"); }));
    CHECK(throws_code(errc::ParseError, [] { parse_date("01-01-2024"); }));
    CHECK(throws_code(errc::ParseError, [] { parse_date("2024-13-01"); }));
    CHECK(throws_code(errc::ParseError, [] { parse_date("2023-02-29"); }));  // not a leap year
    CHECK(throws_code(errc::ParseError, [] { parse_date("2024-1-1"); }));
    CHECK(throws_code(errc::ParseError, [] { parse_date(""); }));
    CHECK(throws_code(errc::ParseError, [] { parse_date("hello"); }));
  }

  TEST_CASE("day arithmetic") {
    const Date a = parse_date("2024-01-30");
    CHECK(format_date(add_days(a, 3)) == "2024-02-02");
    CHECK(day_span(a, add_days(a, 3)) == 3);
    CHECK(day_span(add_days(a, 3), a) == -3);
    CHECK(day_span(a, a) == 0);
  }
}

TEST_SUITE("series construction") {
  TEST_CASE("valid series keeps its data") {
    const DailySeries s = make_series({1.0, 2.0, 3.0});
    CHECK(s.size() == 3);
    CHECK_FALSE(s.empty());
    CHECK(s.values()[0] == 1.0);
    CHECK(s.values()[2] == 3.0);
    CHECK(format_date(s.front_date()) == "2024-01-01");
    CHECK(format_date(s.back_date()) == "2024-01-03");
  }

  TEST_CASE("unsorted dates rejected") {
    std::vector<Date> dates = {parse_date("2024-01-02"), parse_date("2024-01-01")};
    Eigen::VectorXd v(2);
    v << 1.0, 2.0;
    CHECK(throws_code(errc::UnsortedDates, [&] { build_series(dates, v); }));
  }

  TEST_CASE("duplicate dates rejected") {
    std::vector<Date> dates = {parse_date("2024-01-01"), parse_date("2024-01-01")};
    Eigen::VectorXd v(2);
    v << 1.0, 2.0;
    CHECK(throws_code(errc::DuplicateDate, [&] { build_series(dates, v); }));
  }

  TEST_CASE("non-finite values rejected") {
    std::vector<Date> dates = {parse_date("2024-01-01"), parse_date("2024-01-02")};
    Eigen::VectorXd v(2);
    v << 1.0, std::numeric_limits<double>::quiet_NaN();
    CHECK(throws_code(errc::NonFiniteValue, [&] { build_series(dates, v); }));
    v[1] = std::numeric_limits<double>::infinity();
    CHECK(throws_code(errc::NonFiniteValue, [&] { build_series(dates, v); }));
  }

  TEST_CASE("length mismatch rejected") {
    std::vector<Date> dates = {parse_date("2024-01-01")};
    Eigen::VectorXd v(2);
    v << 1.0, 2.0;
    CHECK(throws_code(errc::LengthMismatch, [&] { build_series(dates, v); }));
  }
}

TEST_SUITE("calendar audit") {
  TEST_CASE("one interior gap") {
    std::vector<Date> dates = {parse_date("2024-01-01"), parse_date("2024-01-02"),
                               parse_date("2024-01-04")};
    Eigen::VectorXd v(3);
    v << 1.0, 2.0, 3.0;
    const CalendarReport r = audit_calendar(build_series(dates, v));
    REQUIRE(r.missing_dates.size() == 1);
    CHECK(format_date(r.missing_dates[0]) == "2024-01-03");
    CHECK(r.duplicate_dates.empty());
    CHECK_FALSE(r.clean());
  }

  TEST_CASE("contiguous series is clean") {
    const CalendarReport r = audit_calendar(make_series({1.0, 2.0, 3.0, 4.0}));
    CHECK(r.missing_dates.empty());
    CHECK(r.clean());
  }

  TEST_CASE("wide gap lists every absent day") {
    std::vector<Date> dates = {parse_date("2024-01-01"), parse_date("2024-01-05")};
    Eigen::VectorXd v(2);
    v << 1.0, 2.0;
    const CalendarReport r = audit_calendar(build_series(dates, v));
    REQUIRE(r.missing_dates.size() == 3);
    CHECK(format_date(r.missing_dates[0]) == "2024-01-02");
    CHECK(format_date(r.missing_dates[1]) == "2024-01-03");
    CHECK(format_date(r.missing_dates[2]) == "2024-01-04");
  }

  TEST_CASE("singleton and empty series are trivially clean") {
    CHECK(audit_calendar(make_series({5.0})).clean());
    CHECK(audit_calendar(DailySeries()).clean());
  }
}

TEST_SUITE("train/validation split") {
  TEST_CASE("fraction splits by floor") {
    std::vector<double> v(100);
    for (int i = 0; i < 100; ++i) v[static_cast<size_t>(i)] = i;
    const auto [train, val] = split_fraction(make_series(v), 0.95);
    CHECK(train.size() == 95);
    CHECK(val.size() == 5);
    // boundary values land on the right side
    CHECK(train.values()[94] == 94.0);
    CHECK(val.values()[0] == 95.0);
    // dates stay contiguous across the cut
    CHECK(day_span(train.back_date(), val.front_date()) == 1);
  }

  TEST_CASE("two points split evenly") {
    const auto [train, val] = split_fraction(make_series({1.0, 2.0}), 0.5);
    CHECK(train.size() == 1);
    CHECK(val.size() == 1);
  }

  TEST_CASE("364 points at 0.95") {
    std::vector<double> v(364, 1.0);
    const auto [train, val] = split_fraction(make_series(v), 0.95);
    CHECK(train.size() == 345);
    CHECK(val.size() == 19);
  }

  TEST_CASE("degenerate splits rejected") {
    CHECK(throws_code(errc::DegenerateSplit,
                      [] { split_fraction(make_series({1.0}), 0.5); }));
    // fraction so close to 1 the validation side would be empty
    CHECK(throws_code(errc::DegenerateSplit, [] {
      split_fraction(make_series({1.0, 2.0, 3.0}), std::nextafter(1.0, 0.0));
    }));
    CHECK(throws_code(errc::InvalidArgument,
                      [] { split_fraction(make_series({1.0, 2.0}), 0.0); }));
    CHECK(throws_code(errc::InvalidArgument,
                      [] { split_fraction(make_series({1.0, 2.0}), 1.0); }));
  }
}

TEST_SUITE("series views") {
  TEST_CASE("slice bounds") {
    const DailySeries s = make_series({1.0, 2.0, 3.0, 4.0, 5.0});
    const DailySeries mid = s.slice(1, 3);
    CHECK(mid.size() == 3);
    CHECK(mid.values()[0] == 2.0);
    CHECK(format_date(mid.front_date()) == "2024-01-02");
    CHECK(throws_code(errc::InvalidArgument, [&] { s.slice(3, 5); }));
    CHECK(throws_code(errc::InvalidArgument, [&] { s.slice(-1, 2); }));
  }

  TEST_CASE("up_to and after partition around a cutoff") {
    const DailySeries s = make_series({1.0, 2.0, 3.0, 4.0, 5.0});
    const Date cut = parse_date("2024-01-03");
    const DailySeries head = s.up_to(cut);
    const DailySeries tail = s.after(cut);
    CHECK(head.size() == 3);
    CHECK(tail.size() == 2);
    CHECK(format_date(head.back_date()) == "2024-01-03");  // cutoff inclusive on the left
    CHECK(format_date(tail.front_date()) == "2024-01-04");
    CHECK(head.size() + tail.size() == s.size());

    // cutoff before the range: everything lands in `after`
    CHECK(s.up_to(parse_date("2023-12-01")).empty());
    CHECK(s.after(parse_date("2023-12-01")).size() == 5);
    // cutoff past the range: everything lands in `up_to`
    CHECK(s.up_to(parse_date("2025-01-01")).size() == 5);
    CHECK(s.after(parse_date("2025-01-01")).empty());
  }

  TEST_CASE("with_values swaps values but keeps dates") {
    const DailySeries s = make_series({1.0, 2.0, 3.0});
    Eigen::VectorXd w(3);
    w << 9.0, 8.0, 7.0;
    const DailySeries t = s.with_values(w);
    CHECK(t.values()[0] == 9.0);
    CHECK(t.dates() == s.dates());
    Eigen::VectorXd bad(2);
    bad << 1.0, 2.0;
    CHECK(throws_code(errc::LengthMismatch, [&] { s.with_values(bad); }));
  }
}
