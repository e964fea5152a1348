#include "chronofit/series.hpp"

#include <algorithm>
#include <cmath>

#include "chronofit/error.hpp"

namespace chronofit {

DailySeries::DailySeries(std::vector<Date> dates, Eigen::VectorXd values)
    : dates_(std::move(dates)), values_(std::move(values)) {
  if (static_cast<Eigen::Index>(dates_.size()) != values_.size()) {
    throw Error(errc::LengthMismatch,
                "dates (" + std::to_string(dates_.size()) + ") vs values (" +
                    std::to_string(values_.size()) + ")");
  }
  for (size_t i = 1; i < dates_.size(); ++i) {
    if (dates_[i] == dates_[i - 1]) {
      throw Error(errc::DuplicateDate, "repeated date " + format_date(dates_[i]));
    }
    if (dates_[i] < dates_[i - 1]) {
      throw Error(errc::UnsortedDates,
                  format_date(dates_[i]) + " follows " + format_date(dates_[i - 1]));
    }
  }
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(errc::NonFiniteValue,
                  "value at " + format_date(dates_[static_cast<size_t>(i)]));
    }
  }
}

DailySeries DailySeries::slice(Eigen::Index first, Eigen::Index count) const {
  if (first < 0 || count < 0 || first + count > size()) {
    throw Error(errc::InvalidArgument, "slice out of bounds");
  }
  std::vector<Date> d(dates_.begin() + first, dates_.begin() + first + count);
  return DailySeries(std::move(d), values_.segment(first, count));
}

DailySeries DailySeries::up_to(Date cutoff) const {
  auto it = std::upper_bound(dates_.begin(), dates_.end(), cutoff);
  return slice(0, it - dates_.begin());
}

DailySeries DailySeries::after(Date cutoff) const {
  auto it = std::upper_bound(dates_.begin(), dates_.end(), cutoff);
  Eigen::Index first = it - dates_.begin();
  return slice(first, size() - first);
}

DailySeries DailySeries::with_values(Eigen::VectorXd values) const {
  return DailySeries(dates_, std::move(values));
}

DailySeries build_series(std::vector<Date> dates, Eigen::VectorXd values) {
  return DailySeries(std::move(dates), std::move(values));
}

CalendarReport audit_calendar(const DailySeries& s) {
  CalendarReport report;
  if (s.size() < 2) return report;
  const auto& dates = s.dates();
  for (size_t i = 1; i < dates.size(); ++i) {
    for (Date d = add_days(dates[i - 1], 1); d < dates[i]; d = add_days(d, 1)) {
      report.missing_dates.push_back(d);
    }
  }
  return report;
}

std::pair<DailySeries, DailySeries> split_fraction(const DailySeries& s, double train_frac) {
  if (!(train_frac > 0.0 && train_frac < 1.0)) {
    throw Error(errc::InvalidArgument, "train_frac must lie in (0,1)");
  }
  const Eigen::Index n = s.size();
  // The small epsilon keeps floor() from dropping a point when
  // train_frac * n lands a hair under an integer (e.g. 0.95 * 100).
  const Eigen::Index ntrain =
      static_cast<Eigen::Index>(std::floor(train_frac * static_cast<double>(n) + 1e-9));
  if (ntrain < 1 || n - ntrain < 1) {
    throw Error(errc::DegenerateSplit,
                "split of " + std::to_string(n) + " points at fraction " +
                    std::to_string(train_frac) + " leaves an empty side");
  }
  return {s.slice(0, ntrain), s.slice(ntrain, n - ntrain)};
}

}  // namespace chronofit
