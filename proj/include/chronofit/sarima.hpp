#pragma once

#include <string>
#include <vector>

#include "chronofit/stats.hpp"

namespace chronofit {

// Deterministic-part codes: none, constant, linear trend, constant+linear.
enum class TrendCode { N, C, T, CT };

const char* trend_code_name(TrendCode tr);
int trend_param_count(TrendCode tr);

struct SarimaSpec {
  int p = 0, d = 0, q = 0;  // trend orders
  int P = 0, D = 0, Q = 0;  // seasonal orders
  int m = 1;                // season length
  TrendCode tr = TrendCode::N;

  std::string label() const;  // e.g. (2,0,1,'n')(0,0,1)m23
};

struct SarimaFit {
  SarimaSpec spec;
  VectorXd phi;           // trend AR
  VectorXd theta;         // trend MA
  VectorXd seasonal_phi;  // seasonal AR
  VectorXd seasonal_theta;
  VectorXd trend_coeffs;  // 0-2 values depending on tr
  double sigma2 = 0.0;
  double loglik = 0.0;
  double aicc = 0.0;
  VectorXd residuals;  // one-step errors on the differenced scale
  VectorXd fitted;     // one-step fitted values, training scale; NaN during
                       // the first d + D*m warmup steps
  double css = 0.0;          // objective at the solution
  double css_at_zero = 0.0;  // objective at the all-zero start
  VectorXd train;            // training series (model-input scale)
  std::vector<VectorXd> stages;  // train, after each differencing pass
};

// Conditional-sum-of-squares SARIMA estimation: difference (d regular
// passes, then D seasonal passes at lag m), subtract the deterministic
// part, and minimize the sum of squared one-step errors of the
// multiplicative ARMA recursion with zero pre-sample values, using
// Nelder-Mead from a zero start plus three perturbed restarts.
// Non-stationary / non-invertible parameter points cost 1e12.
SarimaFit sarima_fit(VecRef train, const SarimaSpec& spec);

// Iterates the recursion forward with future errors set to zero, adds the
// deterministic part back, and undoes the differencing from stored stage
// tails. Output is in the training scale.
VectorXd sarima_forecast(const SarimaFit& fit, int h);

namespace sarima_detail {

// Plain and seasonal differencing (order passes each).
VectorXd difference(VecRef v, int order);
VectorXd seasonal_difference(VecRef v, int m, int order);

// All intermediate series: stages[0] = x, then one entry per regular pass,
// then one per seasonal pass; stages.back() is the fully differenced w.
std::vector<VectorXd> build_stages(VecRef x, int d, int D, int m);

// Extends the original-scale series by future.size() values given a
// continuation of the deepest stage.
VectorXd invert_stages(const std::vector<VectorXd>& stages, int d, int D, int m, VecRef future);

// Rebuilds the original series from the deepest stage plus the leading
// values of every intermediate stage (round-trip check).
VectorXd reconstruct(const std::vector<VectorXd>& stages, int d, int D, int m);

// Largest inverse-root modulus of 1 + c_1 z + ... + c_k z^k; the polynomial
// has all roots strictly outside the unit circle iff this is < 1.
double max_inverse_root_modulus(VecRef coeffs);

}  // namespace sarima_detail

}  // namespace chronofit
