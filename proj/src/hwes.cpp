#include "chronofit/hwes.hpp"

#include <cmath>
#include <limits>

#include "chronofit/error.hpp"
#include "chronofit/likelihood.hpp"

namespace chronofit {

namespace {
const char* kind_name(HwesKind k) { return k == HwesKind::Add ? "add" : "mul"; }

void validate(const HwesSpec& spec) {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in01(spec.alpha) || !in01(spec.beta) || !in01(spec.gamma)) {
    throw Error(errc::InvalidArgument, "smoothing parameters must lie in [0,1]");
  }
  if (spec.m < 2) throw Error(errc::InvalidArgument, "season length must be >= 2");
}
}  // namespace

std::string HwesSpec::label() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s/%s a=%.3f b=%.3f g=%.3f m=%d", kind_name(trend_kind),
                kind_name(seasonal_kind), alpha, beta, gamma, m);
  return buf;
}

HwesFit hwes_fit(VecRef train, const HwesSpec& spec) {
  validate(spec);
  const Eigen::Index n = train.size();
  const int m = spec.m;
  if (n < 2 * m) {
    throw Error(errc::SeriesTooShort, "Holt-Winters needs n >= 2m = " + std::to_string(2 * m));
  }
  const bool mul_somewhere = spec.trend_kind == HwesKind::Mul || spec.seasonal_kind == HwesKind::Mul;
  if (mul_somewhere && (train.array() <= 0.0).any()) {
    throw Error(errc::NonPositiveForMultiplicative,
                "multiplicative components need strictly positive data");
  }

  HwesFit fit;
  fit.spec = spec;

  // Initial states from the first two seasons.
  fit.l0 = train.head(m).mean();
  if (spec.trend_kind == HwesKind::Add) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += (train[m + i] - train[i]) / static_cast<double>(m);
    fit.b0 = acc / static_cast<double>(m);
  } else {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      acc += std::pow(train[m + i] / train[i], 1.0 / static_cast<double>(m));
    }
    fit.b0 = acc / static_cast<double>(m);
  }
  fit.s_init.resize(m);
  for (int i = 0; i < m; ++i) {
    fit.s_init[i] = spec.seasonal_kind == HwesKind::Add ? train[i] - fit.l0 : train[i] / fit.l0;
  }
  if (spec.seasonal_kind == HwesKind::Mul && fit.l0 <= 0.0) {
    throw Error(errc::NonPositiveForMultiplicative, "nonpositive first-season mean");
  }

  const auto trend_comb = [&](double l, double b) {
    return spec.trend_kind == HwesKind::Add ? l + b : l * b;
  };

  fit.level.resize(n);
  fit.trend.resize(n);
  fit.seasonal.resize(n);
  fit.fitted.resize(n);
  fit.residuals.resize(n);

  auto degenerate = [&]() {
    throw Error(errc::NonPositiveForMultiplicative,
                "state recursion became degenerate for " + spec.label());
  };

  double l_prev = fit.l0;
  double b_prev = fit.b0;
  auto s_lagged = [&](Eigen::Index t) {
    return t >= m ? fit.seasonal[t - m] : fit.s_init[t % m];
  };

  double sse = 0.0;
  for (Eigen::Index t = 0; t < n; ++t) {
    const double s_m = s_lagged(t);
    const double base = trend_comb(l_prev, b_prev);

    const double predicted = spec.seasonal_kind == HwesKind::Add ? base + s_m : base * s_m;
    fit.fitted[t] = predicted;
    fit.residuals[t] = train[t] - predicted;
    sse += fit.residuals[t] * fit.residuals[t];

    double deseason;
    if (spec.seasonal_kind == HwesKind::Add) {
      deseason = train[t] - s_m;
    } else {
      if (s_m == 0.0) degenerate();
      deseason = train[t] / s_m;
    }
    const double l = spec.alpha * deseason + (1.0 - spec.alpha) * base;

    double b;
    if (spec.trend_kind == HwesKind::Add) {
      b = spec.beta * (l - l_prev) + (1.0 - spec.beta) * b_prev;
    } else {
      if (l_prev == 0.0) degenerate();
      b = spec.beta * (l / l_prev) + (1.0 - spec.beta) * b_prev;
    }

    double detrended;
    if (spec.seasonal_kind == HwesKind::Add) {
      detrended = train[t] - base;
    } else {
      if (base == 0.0) degenerate();
      detrended = train[t] / base;
    }
    const double s = spec.gamma * detrended + (1.0 - spec.gamma) * s_m;

    if (!std::isfinite(l) || !std::isfinite(b) || !std::isfinite(s)) degenerate();
    if (spec.seasonal_kind == HwesKind::Mul && s <= 0.0) degenerate();

    fit.level[t] = l_prev = l;
    fit.trend[t] = b_prev = b;
    fit.seasonal[t] = s;
  }

  fit.sigma2 = sse / static_cast<double>(n);
  fit.loglik = gaussian_css_loglik(sse, n);
  const int k = m + 5;  // 3 smoothing parameters, 2 initial states, m seasonal inits
  // Tiny samples cannot support the AICc correction; mark them as
  // infinitely penalized rather than failing the fit.
  fit.aicc = n > k + 1 ? aicc(fit.loglik, k, n)
                       : std::numeric_limits<double>::infinity();
  return fit;
}

VectorXd hwes_forecast(const HwesFit& fit, int h) {
  if (h < 1) throw Error(errc::InvalidArgument, "horizon must be >= 1");
  const Eigen::Index n = fit.level.size();
  const int m = fit.spec.m;
  const double l = fit.level[n - 1];
  const double b = fit.trend[n - 1];

  auto seasonal_at = [&](Eigen::Index t) {
    return t >= 0 ? fit.seasonal[t] : fit.s_init[(t % m + m) % m];
  };

  VectorXd out(h);
  for (int step = 1; step <= h; ++step) {
    const int k = (step - 1) / m;
    const Eigen::Index idx = n - 1 + step - static_cast<Eigen::Index>(m) * (k + 1);
    const double s = seasonal_at(idx);
    const double base = fit.spec.trend_kind == HwesKind::Add
                            ? l + static_cast<double>(step) * b
                            : l * std::pow(b, static_cast<double>(step));
    out[step - 1] = fit.spec.seasonal_kind == HwesKind::Add ? base + s : base * s;
  }
  return out;
}

}  // namespace chronofit
