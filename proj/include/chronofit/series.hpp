#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "chronofit/date.hpp"

namespace chronofit {

// A daily-resolution univariate series. Dates are strictly increasing
// (gaps allowed, duplicates not) and every value is finite. The constructor
// enforces the invariants, so any DailySeries in circulation is valid.
// Instances are immutable after construction and safe to share across threads.
class DailySeries {
 public:
  DailySeries() = default;
  DailySeries(std::vector<Date> dates, Eigen::VectorXd values);

  const std::vector<Date>& dates() const { return dates_; }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  bool empty() const { return values_.size() == 0; }

  Date front_date() const { return dates_.front(); }
  Date back_date() const { return dates_.back(); }

  // Points [first, first+count).
  DailySeries slice(Eigen::Index first, Eigen::Index count) const;

  // All points with date <= cutoff / date > cutoff.
  DailySeries up_to(Date cutoff) const;
  DailySeries after(Date cutoff) const;

  // Same dates, new values (lengths must agree).
  DailySeries with_values(Eigen::VectorXd values) const;

 private:
  std::vector<Date> dates_;
  Eigen::VectorXd values_;
};

struct CalendarReport {
  std::vector<Date> missing_dates;
  std::vector<Date> duplicate_dates;
  bool clean() const { return missing_dates.empty() && duplicate_dates.empty(); }
};

DailySeries build_series(std::vector<Date> dates, Eigen::VectorXd values);

// Missing dates relative to the contiguous range [min(dates), max(dates)].
// A valid DailySeries cannot contain duplicates, so duplicate_dates is
// always empty here; the field exists for reports built from raw CSV rows.
CalendarReport audit_calendar(const DailySeries& s);

// (train, validation) = (first floor(train_frac * n) points, remainder).
std::pair<DailySeries, DailySeries> split_fraction(const DailySeries& s, double train_frac);

}  // namespace chronofit
