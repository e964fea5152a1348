#pragma once

#include "chronofit/stats.hpp"

namespace chronofit {

// Scalar state-space model: x_k = f x_{k-1} + w, w ~ N(0,q);
// z_k = h x_k + v, v ~ N(0,r).
struct KalmanParams {
  double f = 1.0;
  double h = 1.0;
  double q = 0.1;
  double r = 1.0;
  double x0 = 0.0;
  double p0 = 1.0;
};

struct KalmanOutput {
  VectorXd filtered_means;
  VectorXd filtered_vars;
  VectorXd smoothed_means;
  VectorXd smoothed_vars;
  VectorXd gains;
};

// Data-driven defaults: q as given, r = variance of first differences / 2,
// x0 = first observation, p0 = sample variance of the series.
KalmanParams default_kalman_params(VecRef obs, double q = 0.1);

// Forward pass only (smoothed fields left empty). Step 0 updates directly
// from the prior (x0, p0), i.e. the prior is the step-0 prediction.
KalmanOutput kalman_filter(VecRef obs, const KalmanParams& params);

// Forward pass plus Rauch-Tung-Striebel backward smoothing.
KalmanOutput kalman_smooth(VecRef obs, const KalmanParams& params);

}  // namespace chronofit
