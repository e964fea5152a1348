#pragma once

#include <vector>

#include "chronofit/series.hpp"
#include "chronofit/stats.hpp"

namespace chronofit {

struct OutlierReport {
  std::vector<Eigen::Index> indices;
  std::vector<double> zscores;
  double threshold = 3.0;
};

// Flags positions with |value - mean| / sd >= threshold, using the sample
// mean and sample sd (n-1) of the whole series.
OutlierReport detect_outliers_zscore(const DailySeries& s, double threshold);

// Replaces each flagged value by linear interpolation between the nearest
// unflagged neighbors (x = position index); flags at the boundary take the
// nearest unflagged value. Other values are untouched.
DailySeries repair_linear(const DailySeries& s, const std::vector<Eigen::Index>& indices);

// One preprocessing step together with the values it consumed, enough to
// undo it exactly.
struct TransformStep {
  enum class Kind { Log10, Difference, PercentChange };
  Kind kind = Kind::Log10;
  int order = 0;                 // Difference only
  std::vector<double> anchors;   // leading values consumed by the step
  std::vector<Date> anchor_dates;
};

// Ordered record of applied steps. Invert with invert_chain.
struct TransformChain {
  std::vector<TransformStep> steps;
};

struct TransformedSeries {
  DailySeries series;
  TransformStep step;
};

TransformedSeries apply_log10(const DailySeries& s);
TransformedSeries apply_difference(const DailySeries& s, int order);
TransformedSeries apply_percent_change(const DailySeries& s);

// Undoes every step in reverse order. `transformed` may be longer than the
// chain's own output (e.g. training output with forecast values appended);
// the reconstruction then extends past the original series, which is how
// forecasts return to the original scale.
VectorXd invert_chain(const TransformChain& chain, VecRef transformed);

}  // namespace chronofit
