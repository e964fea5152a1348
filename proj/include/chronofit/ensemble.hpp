#pragma once

#include <string>

#include "chronofit/stats.hpp"

namespace chronofit {

// OLS stacking of two component models: y ~ beta0 + beta1 x1 + beta2 x2,
// fit on in-sample fitted values in the original data scale.
struct EnsembleModel {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  std::string component1;
  std::string component2;
  double training_residual_rmse = 0.0;
};

// Least squares through a rank-revealing QR decomposition; the design
// [1, x1, x2] must have full column rank.
EnsembleModel ols_fit(VecRef y, VecRef x1, VecRef x2);

VectorXd ensemble_forecast(const EnsembleModel& model, VecRef f1, VecRef f2);

}  // namespace chronofit
