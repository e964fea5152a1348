#pragma once

#include <string>
#include <vector>

#include "chronofit/hwes.hpp"
#include "chronofit/preprocess.hpp"
#include "chronofit/sarima.hpp"
#include "chronofit/series.hpp"

namespace chronofit {

struct Weights {
  double c1 = 0.5;
  double c2 = 0.5;
};

// c1, c2 in [0,1] and c1 + c2 = 1 (within 1e-12).
void validate_weights(const Weights& w);

enum class CandidateStatus { Fitted, Failed };

template <typename Spec>
struct GridOutcome {
  Spec candidate;
  CandidateStatus status = CandidateStatus::Failed;
  std::string failure_reason;
  double v1 = 0.0;        // AICc on the training (transformed) scale
  double v2 = 0.0;        // validation SMAPE, percent, original scale
  double combined = 0.0;  // c1*v1 + c2*v2 (optionally min-max normalized)
};

template <typename Spec>
struct GridReport {
  std::vector<GridOutcome<Spec>> outcomes;  // sorted by parameter tuple
  std::size_t best_index = 0;
  Weights weights;
  bool normalized = false;

  const GridOutcome<Spec>& best() const { return outcomes[best_index]; }
};

struct SarimaGridRanges {
  int p_max = 2;
  int d_max = 0;
  int q_max = 2;
  int P_max = 2;
  int D_max = 1;
  int Q_max = 2;
  std::vector<TrendCode> trends = {TrendCode::N, TrendCode::C, TrendCode::T, TrendCode::CT};
};

struct HwesGridRanges {
  std::vector<double> alphas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::vector<double> betas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::vector<double> gammas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::vector<HwesKind> trend_kinds = {HwesKind::Add, HwesKind::Mul};
  std::vector<HwesKind> seasonal_kinds = {HwesKind::Add, HwesKind::Mul};
};

// Exhaustive search minimizing combined = c1 * AICc + c2 * SMAPE.
//
// `train` is the transformed training series (the output of `chain` applied
// to the original-scale training slice); forecasts are pushed back through
// `chain` before scoring against the original-scale `validation` values.
// Candidates whose fit throws are recorded as failed and skipped. Results
// do not depend on `jobs`: outcomes are stored per candidate and sorted by
// parameter tuple before selection, ties resolved to the smallest tuple.
GridReport<SarimaSpec> grid_search_sarima(VecRef train, const DailySeries& validation,
                                          const TransformChain& chain,
                                          const SarimaGridRanges& ranges, int m,
                                          const Weights& weights, int jobs = 1,
                                          bool normalize = false);

GridReport<HwesSpec> grid_search_hwes(VecRef train, const DailySeries& validation,
                                      const TransformChain& chain, const HwesGridRanges& ranges,
                                      int m, const Weights& weights, int jobs = 1,
                                      bool normalize = false);

// CSV rendering (one row per candidate: parameters, v1, v2, combined, status).
std::string grid_report_csv(const GridReport<SarimaSpec>& report);
std::string grid_report_csv(const GridReport<HwesSpec>& report);

}  // namespace chronofit
