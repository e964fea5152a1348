#include "chronofit/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "chronofit/error.hpp"

namespace chronofit {

OutlierReport detect_outliers_zscore(const DailySeries& s, double threshold) {
  if (threshold <= 0.0) throw Error(errc::InvalidArgument, "threshold must be positive");
  if (s.size() < 2) throw Error(errc::SeriesTooShort, "outlier scan needs n >= 2");
  const double mu = s.values().mean();
  const double sd = sample_sd(s.values());
  if (sd == 0.0) throw Error(errc::ZeroVariance, "constant series has no z-scores");

  OutlierReport report;
  report.threshold = threshold;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double z = (s.values()[i] - mu) / sd;
    if (std::abs(z) >= threshold) {
      report.indices.push_back(i);
      report.zscores.push_back(z);
    }
  }
  return report;
}

DailySeries repair_linear(const DailySeries& s, const std::vector<Eigen::Index>& indices) {
  const Eigen::Index n = s.size();
  std::vector<bool> flagged(static_cast<size_t>(n), false);
  for (Eigen::Index i : indices) {
    if (i < 0 || i >= n) throw Error(errc::InvalidArgument, "flagged index out of range");
    flagged[static_cast<size_t>(i)] = true;
  }
  const Eigen::Index clean_count =
      n - static_cast<Eigen::Index>(std::count(flagged.begin(), flagged.end(), true));
  if (clean_count < 2) {
    throw Error(errc::TooFewSupportPoints, "need at least two unflagged points");
  }

  VectorXd repaired = s.values();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!flagged[static_cast<size_t>(i)]) continue;
    Eigen::Index left = i - 1;
    while (left >= 0 && flagged[static_cast<size_t>(left)]) --left;
    Eigen::Index right = i + 1;
    while (right < n && flagged[static_cast<size_t>(right)]) ++right;
    if (left >= 0 && right < n) {
      const double slope =
          (s.values()[right] - s.values()[left]) / static_cast<double>(right - left);
      repaired[i] = s.values()[left] + slope * static_cast<double>(i - left);
    } else if (left >= 0) {
      repaired[i] = s.values()[left];
    } else {
      repaired[i] = s.values()[right];
    }
  }
  return s.with_values(std::move(repaired));
}

TransformedSeries apply_log10(const DailySeries& s) {
  if ((s.values().array() <= 0.0).any()) {
    throw Error(errc::NonPositiveValue, "log10 requires strictly positive values");
  }
  TransformedSeries out;
  out.step.kind = TransformStep::Kind::Log10;
  out.series = s.with_values(s.values().array().log10());
  return out;
}

TransformedSeries apply_difference(const DailySeries& s, int order) {
  if (order < 1) throw Error(errc::InvalidArgument, "difference order must be >= 1");
  if (s.size() <= order) {
    throw Error(errc::SeriesTooShort,
                "differencing of order " + std::to_string(order) + " needs n > order");
  }
  TransformedSeries out;
  out.step.kind = TransformStep::Kind::Difference;
  out.step.order = order;

  VectorXd v = s.values();
  std::vector<Date> dates = s.dates();
  for (int pass = 0; pass < order; ++pass) {
    out.step.anchors.push_back(v[0]);
    out.step.anchor_dates.push_back(dates.front());
    v = (v.tail(v.size() - 1) - v.head(v.size() - 1)).eval();
    dates.erase(dates.begin());
  }
  out.series = DailySeries(std::move(dates), std::move(v));
  return out;
}

TransformedSeries apply_percent_change(const DailySeries& s) {
  const Eigen::Index n = s.size();
  if (n < 2) throw Error(errc::SeriesTooShort, "percent change needs n >= 2");
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (s.values()[i] == 0.0) {
      throw Error(errc::DivisionByZeroValue, "zero value at position " + std::to_string(i));
    }
  }
  TransformedSeries out;
  out.step.kind = TransformStep::Kind::PercentChange;
  out.step.anchors.push_back(s.values()[0]);
  out.step.anchor_dates.push_back(s.front_date());

  VectorXd v(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) v[i] = s.values()[i + 1] / s.values()[i] - 1.0;
  std::vector<Date> dates(s.dates().begin() + 1, s.dates().end());
  out.series = DailySeries(std::move(dates), std::move(v));
  return out;
}

VectorXd invert_chain(const TransformChain& chain, VecRef transformed) {
  VectorXd v = transformed;
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    const TransformStep& step = *it;
    switch (step.kind) {
      case TransformStep::Kind::Log10: {
        v = Eigen::pow(10.0, v.array()).matrix().eval();
        break;
      }
      case TransformStep::Kind::Difference: {
        if (static_cast<int>(step.anchors.size()) != step.order || step.order < 1) {
          throw Error(errc::AnchorMismatch, "difference step carries wrong anchor count");
        }
        for (int pass = step.order - 1; pass >= 0; --pass) {
          VectorXd rebuilt(v.size() + 1);
          rebuilt[0] = step.anchors[static_cast<size_t>(pass)];
          for (Eigen::Index i = 0; i < v.size(); ++i) rebuilt[i + 1] = rebuilt[i] + v[i];
          v = std::move(rebuilt);
        }
        break;
      }
      case TransformStep::Kind::PercentChange: {
        if (step.anchors.size() != 1) {
          throw Error(errc::AnchorMismatch, "percent-change step carries wrong anchor count");
        }
        VectorXd rebuilt(v.size() + 1);
        rebuilt[0] = step.anchors[0];
        for (Eigen::Index i = 0; i < v.size(); ++i) rebuilt[i + 1] = rebuilt[i] * (1.0 + v[i]);
        v = std::move(rebuilt);
        break;
      }
    }
  }
  return v;
}

}  // namespace chronofit
