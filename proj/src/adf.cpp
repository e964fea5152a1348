#include "chronofit/adf.hpp"

#include <cmath>

#include "chronofit/error.hpp"

namespace chronofit {

int schwert_lags(Eigen::Index n) {
  return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

double adf_statistic(VecRef y, RegressionKind kind, int lags) {
  const Eigen::Index n = y.size();
  const int ncols = (kind == RegressionKind::ConstantTrend ? 3 : 2) + lags;
  const Eigen::Index rows = n - 1 - lags;
  if (lags < 0) throw Error(errc::InvalidArgument, "negative lag count");
  if (rows < ncols + 1) {
    throw Error(errc::LagTooLarge, std::to_string(lags) + " lagged differences leave " +
                                       std::to_string(rows) + " usable rows");
  }

  VectorXd dy = y.tail(n - 1) - y.head(n - 1);

  Eigen::MatrixXd x(rows, ncols);
  VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Index t = r + lags;  // index into dy; depends on dy[t-1..t-lags]
    rhs[r] = dy[t];
    int col = 0;
    x(r, col++) = 1.0;
    if (kind == RegressionKind::ConstantTrend) {
      x(r, col++) = static_cast<double>(t + 1);
    }
    x(r, col++) = y[t];  // y_{t-1} in the original indexing of dy[t] = y[t+1]-y[t]
    for (int i = 1; i <= lags; ++i) x(r, col++) = dy[t - i];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  if (qr.rank() < ncols) {
    throw Error(errc::SingularDesign, "ADF regression design is rank deficient");
  }
  const VectorXd beta = qr.solve(rhs);
  const VectorXd resid = rhs - x * beta;
  const double dof = static_cast<double>(rows - ncols);
  const double sigma2 = resid.squaredNorm() / dof;

  const Eigen::MatrixXd xtx_inv =
      (x.transpose() * x).ldlt().solve(Eigen::MatrixXd::Identity(ncols, ncols));
  const int gamma_col = kind == RegressionKind::ConstantTrend ? 2 : 1;
  const double se = std::sqrt(sigma2 * xtx_inv(gamma_col, gamma_col));
  return beta[gamma_col] / se;
}

AdfResult adf_test(VecRef y, RegressionKind kind, std::optional<int> max_lag) {
  if (y.size() < 20) {
    throw Error(errc::SeriesTooShort, "ADF test needs n >= 20, got " + std::to_string(y.size()));
  }
  AdfResult result;
  result.regression_kind = kind;
  result.lags_used = max_lag.value_or(schwert_lags(y.size()));
  result.statistic = adf_statistic(y, kind, result.lags_used);

  const auto& table = adf_table::rows(kind);
  const double s = result.statistic;
  if (s <= table.front().statistic) {
    result.p_value = table.front().level;
  } else if (s >= table.back().statistic) {
    result.p_value = table.back().level;
  } else {
    for (size_t i = 1; i < table.size(); ++i) {
      if (s <= table[i].statistic) {
        const auto& lo = table[i - 1];
        const auto& hi = table[i];
        const double w = (s - lo.statistic) / (hi.statistic - lo.statistic);
        result.p_value = lo.level + w * (hi.level - lo.level);
        break;
      }
    }
  }
  return result;
}

}  // namespace chronofit
