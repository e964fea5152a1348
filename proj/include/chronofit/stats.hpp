#pragma once

#include <Eigen/Dense>
#include <functional>

namespace chronofit {

using Eigen::VectorXd;
using VecRef = const Eigen::Ref<const Eigen::VectorXd>&;

double mean(VecRef v);
// Sample variance / sd with the n-1 denominator.
double sample_variance(VecRef v);
double sample_sd(VecRef v);

// Symmetric mean absolute percentage error, in percent (range [0, 200]).
double smape(VecRef actual, VecRef forecast);

double rmse(VecRef actual, VecRef forecast);

// Autocorrelations r_0..r_max_lag (r_0 = 1).
VectorXd acf(VecRef v, int max_lag);

struct Standardized {
  VectorXd zscores;
  double mu = 0.0;
  double sigma = 0.0;
};
Standardized standardize(VecRef v);

// Additive classical decomposition. Trend uses a centered moving average
// (2 x m when m is even) and is NaN within half a window of each end;
// seasonal repeats the recentred per-phase means everywhere; residual is
// NaN wherever trend is.
struct Decomposition {
  VectorXd trend;
  VectorXd seasonal;
  VectorXd residual;
};
Decomposition decompose_classical(VecRef v, int m);

// Exponential distribution fit (mean parameterization) with the exact
// chi-square 95% confidence interval for the mean.
struct ExpFit {
  double lambda = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  Eigen::Index n = 0;
  double cdf(double x) const;
};
ExpFit fit_exponential(VecRef samples);

// Kolmogorov-Smirnov sup distance between the empirical CDF of the samples
// and the supplied distribution function.
double ks_statistic(VecRef samples, const std::function<double(double)>& cdf);

// Quantile function of the chi-square distribution with df degrees of
// freedom, computed from the regularized incomplete gamma function.
double chi_square_quantile(double p, double df);

// Standard normal quantile (rational approximation, |error| < 1e-9).
double normal_quantile(double p);

}  // namespace chronofit
