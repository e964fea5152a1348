#pragma once

#include <optional>
#include <vector>

#include "chronofit/kalman.hpp"
#include "chronofit/kmeans.hpp"
#include "chronofit/preprocess.hpp"
#include "chronofit/series.hpp"
#include "chronofit/spline.hpp"

namespace chronofit {

enum class SplineMode { Interpolate, Approximate };

struct PeriodConfig {
  double kalman_q = 0.1;
  std::optional<double> kalman_r;  // default: var(first differences) / 2
  bool use_filtered = false;       // false: use the smoothed trajectory
  SplineMode spline_mode = SplineMode::Approximate;
  int lsq_knot_step = 3;           // Approximate mode: interior knot spacing
  int kmeans_max_iter = 100;
  double kmeans_tol = 1e-10;
  double grid_step = 0.1;          // extrema search resolution, days
};

struct PeriodEstimate {
  int period_days = 0;
  double ci_low_days = 0.0;
  double ci_high_days = 0.0;
  std::vector<double> maxima_days;
  std::vector<double> minima_days;
  VectorXd day_differences;  // consecutive maxima gaps, then minima gaps
  ExpFit exp_fit;
  double ks_stat = 0.0;      // raw differences vs the fitted exponential CDF
};

// Intermediate products kept for artifacts and plots.
struct PeriodTrace {
  VectorXd smoothed;          // Kalman trajectory actually used
  VectorXd percent_change;    // percent change of the trajectory
  KMeansResult clusters;      // K = 3 over the percent-change values
  std::vector<double> upper_x, upper_y;  // higher-cluster points (day, value)
  std::vector<double> lower_x, lower_y;  // lower-cluster points
  Spline upper_spline, lower_spline;
};

// Unsupervised period estimation:
//   smooth -> percent change -> 3-means -> spline through each extreme
//   cluster -> extrema day gaps -> exponential mean + 95% CI -> integer
//   period (round half up).
// Needs n >= 60 so a few cycles of a multi-week period can be seen.
PeriodEstimate estimate_period(const DailySeries& cleaned, const PeriodConfig& cfg,
                               PeriodTrace* trace = nullptr);

}  // namespace chronofit
