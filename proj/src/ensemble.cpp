#include "chronofit/ensemble.hpp"

#include <cmath>

#include "chronofit/error.hpp"

namespace chronofit {

EnsembleModel ols_fit(VecRef y, VecRef x1, VecRef x2) {
  const Eigen::Index n = y.size();
  if (x1.size() != n || x2.size() != n) {
    throw Error(errc::LengthMismatch, "regressors must match the response length");
  }
  if (n < 3) throw Error(errc::SeriesTooShort, "stacking fit needs n >= 3");

  Eigen::MatrixXd x(n, 3);
  x.col(0).setOnes();
  x.col(1) = x1;
  x.col(2) = x2;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  if (qr.rank() < 3) {
    throw Error(errc::RankDeficientDesign,
                "stacking design is rank deficient (collinear or constant regressor)");
  }
  const VectorXd beta = qr.solve(y);

  EnsembleModel model;
  model.beta0 = beta[0];
  model.beta1 = beta[1];
  model.beta2 = beta[2];
  const VectorXd resid = y - x * beta;
  model.training_residual_rmse = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  return model;
}

VectorXd ensemble_forecast(const EnsembleModel& model, VecRef f1, VecRef f2) {
  if (f1.size() != f2.size()) {
    throw Error(errc::LengthMismatch, "component forecasts differ in length");
  }
  return (model.beta0 + model.beta1 * f1.array() + model.beta2 * f2.array()).matrix();
}

}  // namespace chronofit
