#pragma once

#include <optional>
#include <vector>

#include "chronofit/stats.hpp"

namespace chronofit {

enum class RegressionKind { Constant, ConstantTrend };

struct AdfResult {
  double statistic = 0.0;
  double p_value = 0.0;
  int lags_used = 0;
  RegressionKind regression_kind = RegressionKind::Constant;
};

// Schwert's lag rule floor(12 * (n/100)^(1/4)).
int schwert_lags(Eigen::Index n);

// The augmented Dickey-Fuller regression
//   dy_t = c (+ d*t) + gamma * y_{t-1} + sum_i phi_i * dy_{t-i} + e_t
// returns the t-ratio of gamma. Exposed separately from adf_test so the
// quantile-table generator can reuse the exact same construction.
double adf_statistic(VecRef y, RegressionKind kind, int lags);

// Unit-root test. p-value from linear interpolation in the simulated
// quantile table shipped with the library (see data/adf_quantiles.txt);
// values outside the tabulated range clamp to the boundary levels
// (0.001 / 0.999). max_lag defaults to the Schwert rule.
AdfResult adf_test(VecRef y, RegressionKind kind,
                   std::optional<int> max_lag = std::nullopt);

namespace adf_table {

struct Row {
  double level;
  double statistic;
};

// Quantile rows for one regression kind, ascending in level (and therefore
// in statistic).
const std::vector<Row>& rows(RegressionKind kind);

// Provenance of the embedded table, echoed in artifacts.
const char* provenance();

}  // namespace adf_table

}  // namespace chronofit
