#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <string>

#include "chronofit/error.hpp"

namespace chronofit {

// Gaussian log-likelihood at the variance MLE sigma2 = sse/n:
// -n/2 * (ln(2 pi sigma2) + 1). Both model families report this form so
// their information criteria are comparable.
inline double gaussian_css_loglik(double sse, Eigen::Index n) {
  if (n <= 0) throw Error(errc::InvalidArgument, "loglik needs n > 0");
  const double sigma2 = std::max(sse / static_cast<double>(n), 1e-300);
  return -0.5 * static_cast<double>(n) * (std::log(2.0 * std::numbers::pi * sigma2) + 1.0);
}

// Corrected Akaike information criterion.
inline double aicc(double loglik, int k, Eigen::Index n) {
  if (k < 1) throw Error(errc::InvalidArgument, "aicc needs k >= 1");
  if (n <= k + 1) {
    throw Error(errc::SampleTooSmallForAicc,
                "n = " + std::to_string(n) + " with k = " + std::to_string(k));
  }
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  return -2.0 * loglik + 2.0 * kd + 2.0 * kd * (kd + 1.0) / (nd - kd - 1.0);
}

}  // namespace chronofit
