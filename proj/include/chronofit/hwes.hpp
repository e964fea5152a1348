#pragma once

#include <string>

#include "chronofit/stats.hpp"

namespace chronofit {

enum class HwesKind { Add, Mul };

struct HwesSpec {
  HwesKind trend_kind = HwesKind::Add;
  HwesKind seasonal_kind = HwesKind::Add;
  double alpha = 0.5;  // level smoothing
  double beta = 0.5;   // trend smoothing (the starred beta)
  double gamma = 0.5;  // seasonal smoothing
  int m = 2;           // season length

  std::string label() const;
};

struct HwesFit {
  HwesSpec spec;
  VectorXd level;     // l_t, t = 0..n-1 (post-update states)
  VectorXd trend;     // b_t
  VectorXd seasonal;  // s_t (the index updated at step t)
  VectorXd fitted;    // one-step predictions y^_t|t-1
  VectorXd residuals;
  double l0 = 0.0, b0 = 0.0;  // initial states
  VectorXd s_init;            // seasonal state for the season before t = 0
  double sigma2 = 0.0;
  double loglik = 0.0;
  double aicc = 0.0;
};

// Holt-Winters exponential smoothing with additive or multiplicative trend
// and seasonality. Initialization: l0 = mean of the first season;
// b0 = mean of (y_{m+i} - y_i)/m (additive) or mean of (y_{m+i}/y_i)^(1/m)
// (multiplicative); initial seasonal = y_i - l0 or y_i / l0 over the first
// season. Needs n >= 2m; multiplicative variants need positive data.
HwesFit hwes_fit(VecRef train, const HwesSpec& spec);

VectorXd hwes_forecast(const HwesFit& fit, int h);

}  // namespace chronofit
