#include "chronofit/period.hpp"

#include <cmath>

#include "chronofit/error.hpp"

namespace chronofit {

PeriodEstimate estimate_period(const DailySeries& cleaned, const PeriodConfig& cfg,
                               PeriodTrace* trace) {
  if (cleaned.size() < 60) {
    throw Error(errc::SeriesTooShort,
                "period estimation needs n >= 60, got " + std::to_string(cleaned.size()));
  }

  KalmanParams kp = default_kalman_params(cleaned.values(), cfg.kalman_q);
  if (cfg.kalman_r) kp.r = *cfg.kalman_r;
  const KalmanOutput ko = kalman_smooth(cleaned.values(), kp);
  const VectorXd& trajectory = cfg.use_filtered ? ko.filtered_means : ko.smoothed_means;

  const DailySeries smoothed = cleaned.with_values(trajectory);
  const TransformedSeries pct = apply_percent_change(smoothed);
  const VectorXd& v = pct.series.values();

  KMeansResult clusters;
  try {
    clusters = kmeans_1d(v, 3, cfg.kmeans_max_iter, cfg.kmeans_tol);
  } catch (const Error& e) {
    if (e.code() == errc::TooFewDistinctValues) {
      // A structureless (near-constant) signal cannot produce extrema.
      throw Error(errc::NoExtremaFound, "percent-change signal has no cluster structure");
    }
    throw;
  }

  // Day axis: position of each percent-change point within the series.
  std::vector<double> upper_x, upper_y, lower_x, lower_y;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const int c = clusters.assignments[static_cast<size_t>(i)];
    if (c == clusters.higher_rank()) {
      upper_x.push_back(static_cast<double>(i));
      upper_y.push_back(v[i]);
    } else if (c == clusters.lower_rank()) {
      lower_x.push_back(static_cast<double>(i));
      lower_y.push_back(v[i]);
    }
  }

  auto fit_cluster = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    const Eigen::Map<const VectorXd> x(xs.data(), static_cast<Eigen::Index>(xs.size()));
    const Eigen::Map<const VectorXd> y(ys.data(), static_cast<Eigen::Index>(ys.size()));
    try {
      return cfg.spline_mode == SplineMode::Interpolate ? fit_cubic_spline(x, y)
                                                        : fit_lsq_spline(x, y, cfg.lsq_knot_step);
    } catch (const Error& e) {
      if (e.code() == errc::TooFewPoints) {
        throw Error(errc::NoExtremaFound, "an extreme cluster has fewer than 4 points");
      }
      throw;
    }
  };
  const Spline upper = fit_cluster(upper_x, upper_y);
  const Spline lower = fit_cluster(lower_x, lower_y);

  PeriodEstimate est;
  est.maxima_days = find_extrema(upper, ExtremumKind::Maxima, cfg.grid_step);
  est.minima_days = find_extrema(lower, ExtremumKind::Minima, cfg.grid_step);
  if (est.maxima_days.size() < 2 || est.minima_days.size() < 2) {
    throw Error(errc::NoExtremaFound,
                "need >= 2 maxima and >= 2 minima, found " +
                    std::to_string(est.maxima_days.size()) + " and " +
                    std::to_string(est.minima_days.size()));
  }

  std::vector<double> gaps;
  for (size_t i = 1; i < est.maxima_days.size(); ++i) {
    gaps.push_back(est.maxima_days[i] - est.maxima_days[i - 1]);
  }
  for (size_t i = 1; i < est.minima_days.size(); ++i) {
    gaps.push_back(est.minima_days[i] - est.minima_days[i - 1]);
  }
  est.day_differences = Eigen::Map<const VectorXd>(gaps.data(), static_cast<Eigen::Index>(gaps.size()));

  est.exp_fit = fit_exponential(est.day_differences);
  est.ks_stat = ks_statistic(est.day_differences,
                             [&](double x) { return est.exp_fit.cdf(x); });
  est.period_days = static_cast<int>(std::floor(est.exp_fit.lambda + 0.5));
  est.ci_low_days = est.exp_fit.ci_low;
  est.ci_high_days = est.exp_fit.ci_high;

  if (trace) {
    trace->smoothed = trajectory;
    trace->percent_change = v;
    trace->clusters = clusters;
    trace->upper_x = std::move(upper_x);
    trace->upper_y = std::move(upper_y);
    trace->lower_x = std::move(lower_x);
    trace->lower_y = std::move(lower_y);
    trace->upper_spline = upper;
    trace->lower_spline = lower;
  }
  return est;
}

}  // namespace chronofit
