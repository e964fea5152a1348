#include "chronofit/kalman.hpp"

#include <algorithm>

#include "chronofit/error.hpp"

namespace chronofit {

namespace {
void validate(const KalmanParams& p) {
  if (p.q < 0.0) throw Error(errc::InvalidArgument, "process noise q must be >= 0");
  if (p.r <= 0.0) throw Error(errc::InvalidArgument, "measurement noise r must be > 0");
  if (p.p0 <= 0.0) throw Error(errc::InvalidArgument, "initial variance p0 must be > 0");
}
}  // namespace

KalmanParams default_kalman_params(VecRef obs, double q) {
  if (obs.size() == 0) throw Error(errc::EmptySeries, "no observations");
  KalmanParams p;
  p.q = q;
  p.x0 = obs[0];
  p.p0 = obs.size() >= 2 ? sample_variance(obs) : 1.0;
  if (p.p0 <= 0.0) p.p0 = 1.0;
  if (obs.size() >= 3) {
    const VectorXd d = obs.tail(obs.size() - 1) - obs.head(obs.size() - 1);
    p.r = sample_variance(d) / 2.0;
  }
  if (p.r <= 0.0) p.r = 1e-12;  // constant series: keep r positive
  return p;
}

KalmanOutput kalman_filter(VecRef obs, const KalmanParams& params) {
  const Eigen::Index n = obs.size();
  if (n == 0) throw Error(errc::EmptySeries, "no observations");
  validate(params);

  KalmanOutput out;
  out.filtered_means.resize(n);
  out.filtered_vars.resize(n);
  out.gains.resize(n);

  double x = params.x0;
  double p = params.p0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double x_pred, p_pred;
    if (k == 0) {
      x_pred = params.x0;  // the prior plays the role of the first prediction
      p_pred = params.p0;
    } else {
      x_pred = params.f * x;
      p_pred = params.f * params.f * p + params.q;
    }
    const double gain = p_pred * params.h / (params.h * params.h * p_pred + params.r);
    x = x_pred + gain * (obs[k] - params.h * x_pred);
    p = (1.0 - gain * params.h) * p_pred;
    out.filtered_means[k] = x;
    out.filtered_vars[k] = p;
    out.gains[k] = gain;
  }
  return out;
}

KalmanOutput kalman_smooth(VecRef obs, const KalmanParams& params) {
  KalmanOutput out = kalman_filter(obs, params);
  const Eigen::Index n = obs.size();
  out.smoothed_means.resize(n);
  out.smoothed_vars.resize(n);
  out.smoothed_means[n - 1] = out.filtered_means[n - 1];
  out.smoothed_vars[n - 1] = out.filtered_vars[n - 1];
  for (Eigen::Index k = n - 2; k >= 0; --k) {
    const double p_pred_next = params.f * params.f * out.filtered_vars[k] + params.q;
    const double c = out.filtered_vars[k] * params.f / p_pred_next;
    out.smoothed_means[k] =
        out.filtered_means[k] + c * (out.smoothed_means[k + 1] - params.f * out.filtered_means[k]);
    out.smoothed_vars[k] =
        out.filtered_vars[k] + c * c * (out.smoothed_vars[k + 1] - p_pred_next);
    // Guard against nonpositive variance from roundoff when q = 0.
    out.smoothed_vars[k] = std::max(out.smoothed_vars[k], 1e-300);
  }
  return out;
}

}  // namespace chronofit
