#include "chronofit/sarima.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>

#include "chronofit/error.hpp"
#include "chronofit/likelihood.hpp"
#include "chronofit/simplex.hpp"

namespace chronofit {

const char* trend_code_name(TrendCode tr) {
  switch (tr) {
    case TrendCode::N: return "n";
    case TrendCode::C: return "c";
    case TrendCode::T: return "t";
    case TrendCode::CT: return "ct";
  }
  return "?";
}

int trend_param_count(TrendCode tr) {
  switch (tr) {
    case TrendCode::N: return 0;
    case TrendCode::C: return 1;
    case TrendCode::T: return 1;
    case TrendCode::CT: return 2;
  }
  return 0;
}

std::string SarimaSpec::label() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%d,%d,%d,'%s')(%d,%d,%d)m%d", p, d, q, trend_code_name(tr),
                P, D, Q, m);
  return buf;
}

namespace sarima_detail {

VectorXd difference(VecRef v, int order) {
  VectorXd out = v;
  for (int pass = 0; pass < order; ++pass) {
    if (out.size() < 2) throw Error(errc::SeriesTooShort, "differencing exhausted the series");
    out = (out.tail(out.size() - 1) - out.head(out.size() - 1)).eval();
  }
  return out;
}

VectorXd seasonal_difference(VecRef v, int m, int order) {
  if (m < 1) throw Error(errc::InvalidArgument, "seasonal lag must be >= 1");
  VectorXd out = v;
  for (int pass = 0; pass < order; ++pass) {
    if (out.size() <= m) throw Error(errc::SeriesTooShort, "seasonal differencing exhausted the series");
    out = (out.tail(out.size() - m) - out.head(out.size() - m)).eval();
  }
  return out;
}

std::vector<VectorXd> build_stages(VecRef x, int d, int D, int m) {
  std::vector<VectorXd> stages;
  stages.push_back(x);
  for (int pass = 0; pass < d; ++pass) stages.push_back(difference(stages.back(), 1));
  for (int pass = 0; pass < D; ++pass) stages.push_back(seasonal_difference(stages.back(), m, 1));
  return stages;
}

VectorXd invert_stages(const std::vector<VectorXd>& stages, int d, int D, int m, VecRef future) {
  const Eigen::Index h = future.size();
  VectorXd current = future;
  // Walk back up: seasonal passes first (they were applied last).
  for (int j = d + D - 1; j >= 0; --j) {
    const int lag = j >= d ? m : 1;
    const VectorXd& parent = stages[static_cast<size_t>(j)];
    VectorXd next(h);
    for (Eigen::Index i = 0; i < h; ++i) {
      const double prev = i >= lag ? next[i - lag] : parent[parent.size() - lag + i];
      next[i] = prev + current[i];
    }
    current = std::move(next);
  }
  return current;
}

VectorXd reconstruct(const std::vector<VectorXd>& stages, int d, int D, int m) {
  VectorXd current = stages.back();
  for (int j = d + D - 1; j >= 0; --j) {
    const int lag = j >= d ? m : 1;
    const VectorXd& parent = stages[static_cast<size_t>(j)];
    VectorXd next(parent.size());
    for (Eigen::Index i = 0; i < lag; ++i) next[i] = parent[i];
    for (Eigen::Index i = lag; i < parent.size(); ++i) next[i] = next[i - lag] + current[i - lag];
    current = std::move(next);
  }
  return current;
}

double max_inverse_root_modulus(VecRef coeffs) {
  Eigen::Index deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
  if (deg == 0) return 0.0;
  if (deg == 1) return std::abs(coeffs[0]);
  if (deg == 2) {
    // Inverse roots of 1 + c1 z + c2 z^2 solve w^2 + c1 w + c2 = 0.
    const std::complex<double> disc =
        std::sqrt(std::complex<double>(coeffs[0] * coeffs[0] - 4.0 * coeffs[1], 0.0));
    const std::complex<double> r1 = (-coeffs[0] + disc) / 2.0;
    const std::complex<double> r2 = (-coeffs[0] - disc) / 2.0;
    return std::max(std::abs(r1), std::abs(r2));
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (Eigen::Index i = 0; i < deg; ++i) companion(0, i) = -coeffs[i];
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  return companion.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace sarima_detail

namespace {

using sarima_detail::max_inverse_root_modulus;

struct LagTerm {
  Eigen::Index lag;
  double value;
};

// Expanded AR and MA lag polynomials (coefficients of w~ / eps at each lag),
// sign convention: eps_t = w~_t + sum_ar ar.value * w~_{t-lag}
//                        - sum_ma ma.value * eps_{t-lag}.
struct Expansion {
  std::vector<LagTerm> ar;
  std::vector<LagTerm> ma;
};

Expansion expand(const SarimaSpec& spec, VecRef phi, VecRef theta, VecRef sphi, VecRef stheta) {
  Expansion e;
  for (int i = 1; i <= spec.p; ++i) e.ar.push_back({i, -phi[i - 1]});
  for (int j = 1; j <= spec.P; ++j) e.ar.push_back({static_cast<Eigen::Index>(j) * spec.m, -sphi[j - 1]});
  for (int i = 1; i <= spec.p; ++i) {
    for (int j = 1; j <= spec.P; ++j) {
      e.ar.push_back({i + static_cast<Eigen::Index>(j) * spec.m, phi[i - 1] * sphi[j - 1]});
    }
  }
  for (int i = 1; i <= spec.q; ++i) e.ma.push_back({i, theta[i - 1]});
  for (int j = 1; j <= spec.Q; ++j) e.ma.push_back({static_cast<Eigen::Index>(j) * spec.m, stheta[j - 1]});
  for (int i = 1; i <= spec.q; ++i) {
    for (int j = 1; j <= spec.Q; ++j) {
      e.ma.push_back({i + static_cast<Eigen::Index>(j) * spec.m, theta[i - 1] * stheta[j - 1]});
    }
  }
  return e;
}

struct ParamView {
  VectorXd phi, theta, sphi, stheta, trend;
};

ParamView split_params(const SarimaSpec& spec, VecRef params) {
  ParamView v;
  Eigen::Index at = 0;
  v.phi = params.segment(at, spec.p); at += spec.p;
  v.theta = params.segment(at, spec.q); at += spec.q;
  v.sphi = params.segment(at, spec.P); at += spec.P;
  v.stheta = params.segment(at, spec.Q); at += spec.Q;
  v.trend = params.segment(at, trend_param_count(spec.tr));
  return v;
}

// Deterministic part at stage-local time index t (0-based); the linear
// trend regressor is t+1 so it starts at 1 for the first usable point and
// keeps counting into the forecast region.
double deterministic_at(TrendCode tr, VecRef trend, Eigen::Index t) {
  switch (tr) {
    case TrendCode::N: return 0.0;
    case TrendCode::C: return trend[0];
    case TrendCode::T: return trend[0] * static_cast<double>(t + 1);
    case TrendCode::CT: return trend[0] + trend[1] * static_cast<double>(t + 1);
  }
  return 0.0;
}

constexpr double kPenalty = 1e12;
constexpr double kRootMargin = 1.0 - 1e-8;

bool roots_ok(const ParamView& v) {
  return max_inverse_root_modulus(-v.phi) < kRootMargin &&
         max_inverse_root_modulus(-v.sphi) < kRootMargin &&
         max_inverse_root_modulus(v.theta) < kRootMargin &&
         max_inverse_root_modulus(v.stheta) < kRootMargin;
}

// One-step errors of the multiplicative recursion, pre-sample values zero.
void recursion_errors(const Expansion& e, VecRef wt, VectorXd& eps) {
  const Eigen::Index n = wt.size();
  eps.resize(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    double acc = wt[t];
    for (const LagTerm& term : e.ar) {
      if (t >= term.lag) acc += term.value * wt[t - term.lag];
    }
    for (const LagTerm& term : e.ma) {
      if (t >= term.lag) acc -= term.value * eps[t - term.lag];
    }
    eps[t] = acc;
  }
}

double css_objective(const SarimaSpec& spec, VecRef w, VecRef params, VectorXd& wt_scratch,
                     VectorXd& eps_scratch) {
  const ParamView v = split_params(spec, params);
  if (!roots_ok(v)) return kPenalty;
  const Eigen::Index n = w.size();
  wt_scratch.resize(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    wt_scratch[t] = w[t] - deterministic_at(spec.tr, v.trend, t);
  }
  const Expansion e = expand(spec, v.phi, v.theta, v.sphi, v.stheta);
  recursion_errors(e, wt_scratch, eps_scratch);
  const double sse = eps_scratch.squaredNorm();
  return std::isfinite(sse) ? sse : kPenalty;
}

void validate_spec(const SarimaSpec& spec) {
  if (spec.p < 0 || spec.d < 0 || spec.q < 0 || spec.P < 0 || spec.D < 0 || spec.Q < 0) {
    throw Error(errc::InvalidArgument, "negative order in " + spec.label());
  }
  if ((spec.P > 0 || spec.D > 0 || spec.Q > 0) && spec.m < 2) {
    throw Error(errc::InvalidArgument, "seasonal orders need m >= 2 in " + spec.label());
  }
  if (spec.m < 1) throw Error(errc::InvalidArgument, "m must be >= 1");
}

}  // namespace

SarimaFit sarima_fit(VecRef train, const SarimaSpec& spec) {
  validate_spec(spec);
  const Eigen::Index warmup = spec.d + spec.D * spec.m;
  if (train.size() <= warmup) {
    throw Error(errc::SeriesTooShort, "series shorter than the differencing depth of " +
                                          spec.label());
  }
  SarimaFit fit;
  fit.spec = spec;
  fit.train = train;
  fit.stages = sarima_detail::build_stages(train, spec.d, spec.D, spec.m);
  const VectorXd& w = fit.stages.back();
  const Eigen::Index n = w.size();

  const Eigen::Index min_n = 10 + spec.p + spec.q +
                             static_cast<Eigen::Index>(spec.P + spec.Q) * spec.m;
  if (n < min_n) {
    throw Error(errc::SeriesTooShort, "need >= " + std::to_string(min_n) +
                                          " differenced points for " + spec.label() + ", have " +
                                          std::to_string(n));
  }

  const Eigen::Index dim =
      spec.p + spec.q + spec.P + spec.Q + trend_param_count(spec.tr);

  VectorXd wt_scratch, eps_scratch;
  auto objective = [&](VecRef params) {
    return css_objective(spec, w, params, wt_scratch, eps_scratch);
  };

  const VectorXd zero = VectorXd::Zero(dim);
  fit.css_at_zero = objective(zero);

  VectorXd best = zero;
  if (dim > 0) {
    const SimplexResult opt = nelder_mead_restarts(objective, zero);
    if (!(opt.value < kPenalty)) {
      throw Error(errc::OptimizerFailure, "no finite objective for " + spec.label());
    }
    // The zero start itself is always admissible; never return worse.
    best = opt.value <= fit.css_at_zero ? opt.x : zero;
  }

  fit.css = css_objective(spec, w, best, wt_scratch, eps_scratch);
  fit.residuals = eps_scratch;
  const ParamView v = split_params(spec, best);
  fit.phi = v.phi;
  fit.theta = v.theta;
  fit.seasonal_phi = v.sphi;
  fit.seasonal_theta = v.stheta;
  fit.trend_coeffs = v.trend;

  fit.sigma2 = fit.css / static_cast<double>(n);
  fit.loglik = gaussian_css_loglik(fit.css, n);
  const int k = spec.p + spec.q + spec.P + spec.Q + trend_param_count(spec.tr) + 1;
  fit.aicc = aicc(fit.loglik, k, n);

  // One-step fitted values: predicted w~ from the recursion, deterministic
  // part added back, then lifted through the stages against actual history.
  VectorXd predicted = VectorXd(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    predicted[t] = wt_scratch[t] - fit.residuals[t] + deterministic_at(spec.tr, v.trend, t);
  }
  for (int j = static_cast<int>(fit.stages.size()) - 2; j >= 0; --j) {
    const int lag = j >= spec.d ? spec.m : 1;
    const VectorXd& parent = fit.stages[static_cast<size_t>(j)];
    VectorXd lifted = VectorXd::Constant(parent.size(), std::numeric_limits<double>::quiet_NaN());
    for (Eigen::Index i = lag; i < parent.size(); ++i) {
      lifted[i] = parent[i - lag] + predicted[i - lag];
    }
    predicted = std::move(lifted);
  }
  fit.fitted = std::move(predicted);
  return fit;
}

VectorXd sarima_forecast(const SarimaFit& fit, int h) {
  if (h < 1) throw Error(errc::InvalidArgument, "horizon must be >= 1");
  const SarimaSpec& spec = fit.spec;
  const VectorXd& w = fit.stages.back();
  const Eigen::Index n = w.size();

  const Expansion e =
      expand(spec, fit.phi, fit.theta, fit.seasonal_phi, fit.seasonal_theta);

  // w~ history followed by the h-step extension with future errors zero.
  VectorXd wt(n + h);
  for (Eigen::Index t = 0; t < n; ++t) {
    wt[t] = w[t] - deterministic_at(spec.tr, fit.trend_coeffs, t);
  }
  VectorXd w_future(h);
  for (Eigen::Index t = n; t < n + h; ++t) {
    double acc = 0.0;
    for (const LagTerm& term : e.ar) {
      if (t >= term.lag) acc -= term.value * wt[t - term.lag];
    }
    for (const LagTerm& term : e.ma) {
      const Eigen::Index back = t - term.lag;
      if (back >= 0 && back < n) acc += term.value * fit.residuals[back];
    }
    wt[t] = acc;
    w_future[t - n] = acc + deterministic_at(spec.tr, fit.trend_coeffs, t);
  }

  return sarima_detail::invert_stages(fit.stages, spec.d, spec.D, spec.m, w_future);
}

}  // namespace chronofit
