#include "chronofit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "chronofit/error.hpp"

namespace chronofit {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_same_nonzero_length(VecRef a, VecRef f) {
  if (a.size() != f.size()) {
    throw Error(errc::LengthMismatch, std::to_string(a.size()) + " vs " +
                                          std::to_string(f.size()) + " points");
  }
  if (a.size() == 0) throw Error(errc::LengthMismatch, "empty series");
}
}  // namespace

double mean(VecRef v) {
  if (v.size() == 0) throw Error(errc::EmptySeries, "mean of empty vector");
  return v.mean();
}

double sample_variance(VecRef v) {
  if (v.size() < 2) throw Error(errc::SeriesTooShort, "variance needs n >= 2");
  const double mu = v.mean();
  return (v.array() - mu).square().sum() / static_cast<double>(v.size() - 1);
}

double sample_sd(VecRef v) { return std::sqrt(sample_variance(v)); }

double smape(VecRef actual, VecRef forecast) {
  require_same_nonzero_length(actual, forecast);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < actual.size(); ++i) {
    const double denom = (std::abs(actual[i]) + std::abs(forecast[i])) / 2.0;
    if (denom == 0.0) {
      throw Error(errc::BothZeroPair, "pair " + std::to_string(i) + " is (0, 0)");
    }
    acc += std::abs(actual[i] - forecast[i]) / denom;
  }
  return 100.0 * acc / static_cast<double>(actual.size());
}

double rmse(VecRef actual, VecRef forecast) {
  require_same_nonzero_length(actual, forecast);
  return std::sqrt((actual - forecast).squaredNorm() / static_cast<double>(actual.size()));
}

VectorXd acf(VecRef v, int max_lag) {
  const Eigen::Index n = v.size();
  if (max_lag < 0) throw Error(errc::InvalidArgument, "max_lag must be >= 0");
  if (max_lag >= n) {
    throw Error(errc::LagTooLarge,
                "max_lag " + std::to_string(max_lag) + " with n = " + std::to_string(n));
  }
  const double mu = v.mean();
  const VectorXd centered = v.array() - mu;
  const double denom = centered.squaredNorm();
  if (denom == 0.0) throw Error(errc::ZeroVariance, "constant series has no ACF");
  VectorXd r(max_lag + 1);
  for (int k = 0; k <= max_lag; ++k) {
    r[k] = centered.head(n - k).dot(centered.tail(n - k)) / denom;
  }
  return r;
}

Standardized standardize(VecRef v) {
  if (v.size() < 2) throw Error(errc::SeriesTooShort, "standardize needs n >= 2");
  const double mu = v.mean();
  const double sigma = sample_sd(v);
  if (sigma == 0.0) throw Error(errc::ZeroVariance, "constant sample");
  Standardized out;
  out.mu = mu;
  out.sigma = sigma;
  out.zscores = (v.array() - mu) / sigma;
  return out;
}

Decomposition decompose_classical(VecRef v, int m) {
  const Eigen::Index n = v.size();
  if (m < 2) throw Error(errc::InvalidArgument, "period must be >= 2");
  if (n < 2 * m) {
    throw Error(errc::SeriesTooShort, "decomposition needs n >= 2m = " + std::to_string(2 * m));
  }

  Decomposition out;
  out.trend = VectorXd::Constant(n, kNaN);
  const bool even = (m % 2 == 0);
  const int half = even ? m / 2 : (m - 1) / 2;
  for (Eigen::Index t = half; t + half < n; ++t) {
    double acc = 0.0;
    if (even) {
      acc += 0.5 * v[t - half] + 0.5 * v[t + half];
      for (int j = -half + 1; j <= half - 1; ++j) acc += v[t + j];
    } else {
      for (int j = -half; j <= half; ++j) acc += v[t + j];
    }
    out.trend[t] = acc / static_cast<double>(m);
  }

  // Per-phase means of the detrended series, recentred to sum to zero.
  std::vector<double> phase_sum(m, 0.0);
  std::vector<int> phase_count(m, 0);
  for (Eigen::Index t = 0; t < n; ++t) {
    if (std::isnan(out.trend[t])) continue;
    phase_sum[t % m] += v[t] - out.trend[t];
    phase_count[t % m] += 1;
  }
  std::vector<double> phase_mean(m, 0.0);
  double grand = 0.0;
  for (int ph = 0; ph < m; ++ph) {
    phase_mean[ph] = phase_count[ph] > 0 ? phase_sum[ph] / phase_count[ph] : 0.0;
    grand += phase_mean[ph];
  }
  grand /= static_cast<double>(m);

  out.seasonal = VectorXd(n);
  for (Eigen::Index t = 0; t < n; ++t) out.seasonal[t] = phase_mean[t % m] - grand;

  out.residual = VectorXd::Constant(n, kNaN);
  for (Eigen::Index t = 0; t < n; ++t) {
    if (!std::isnan(out.trend[t])) out.residual[t] = v[t] - out.trend[t] - out.seasonal[t];
  }
  return out;
}

double ExpFit::cdf(double x) const { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x / lambda); }

ExpFit fit_exponential(VecRef samples) {
  const Eigen::Index n = samples.size();
  if (n < 2) throw Error(errc::SeriesTooShort, "exponential fit needs n >= 2");
  if ((samples.array() <= 0.0).any()) {
    throw Error(errc::NonPositiveSample, "exponential samples must be positive");
  }
  ExpFit fit;
  fit.n = n;
  fit.lambda = samples.mean();
  const double sum2 = 2.0 * static_cast<double>(n) * fit.lambda;  // 2 n xbar
  fit.ci_low = sum2 / chi_square_quantile(0.975, 2.0 * static_cast<double>(n));
  fit.ci_high = sum2 / chi_square_quantile(0.025, 2.0 * static_cast<double>(n));
  return fit;
}

double ks_statistic(VecRef samples, const std::function<double(double)>& cdf) {
  const Eigen::Index n = samples.size();
  if (n < 1) throw Error(errc::EmptySeries, "KS statistic needs n >= 1");
  std::vector<double> sorted(samples.data(), samples.data() + n);
  std::sort(sorted.begin(), sorted.end());
  double d = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double f = cdf(sorted[static_cast<size_t>(i)]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    d = std::max(d, std::max(f - lo, hi - f));
  }
  return d;
}

namespace {

// Regularized lower incomplete gamma P(a, x), series + continued fraction.
double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    // Series expansion.
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Lentz continued fraction for Q(a, x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(errc::InvalidArgument, "normal quantile needs p in (0,1)");
  }
  // Acklam's rational approximation with one Halley refinement step.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley step against the exact CDF via erfc.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double chi_square_quantile(double p, double df) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(errc::InvalidArgument, "chi-square quantile needs p in (0,1)");
  }
  if (df <= 0.0) throw Error(errc::InvalidArgument, "df must be positive");
  const double a = df / 2.0;
  // Wilson-Hilferty start, then safeguarded Newton on P(a, x/2) = p.
  const double z = normal_quantile(p);
  const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  double x = df * t * t * t;
  if (x <= 0.0) x = 1e-8;
  const double lg = std::lgamma(a);
  for (int iter = 0; iter < 100; ++iter) {
    const double f = gamma_p(a, x / 2.0) - p;
    // d/dx P(a, x/2) = (x/2)^{a-1} e^{-x/2} / (2 Gamma(a))
    const double logpdf = (a - 1.0) * std::log(x / 2.0) - x / 2.0 - lg - std::log(2.0);
    const double deriv = std::exp(logpdf);
    if (deriv <= 0.0) break;
    double step = f / deriv;
    double next = x - step;
    while (next <= 0.0) {
      step /= 2.0;
      next = x - step;
    }
    x = next;
    if (std::abs(step) < 1e-12 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace chronofit
