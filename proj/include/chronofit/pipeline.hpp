#pragma once

#include <string>

#include "chronofit/adf.hpp"
#include "chronofit/config.hpp"
#include "chronofit/ensemble.hpp"
#include "chronofit/period.hpp"
#include "chronofit/search.hpp"

namespace chronofit {

// The five pipeline stages behind the CLI subcommands. Each stage reads its
// inputs from config / earlier artifacts in `output_dir`, writes its own
// artifacts there, and returns the in-memory result for callers that want
// to keep going without touching disk again.
//
// Artifact inventory (all under output_dir):
//   clean    -> raw.csv cleaned.csv calendar_report.csv outlier_report.csv
//   period   -> period.json acf.csv kalman.csv clusters.csv spline_upper.csv
//               spline_lower.csv day_differences.csv
//   fit      -> model_bundle.json sarima_grid.csv hwes_grid.csv
//               decomposition.csv (plus acf.csv/kalman.csv when the period
//               stage was skipped)
//   evaluate -> metrics.csv forecast.csv
//   report   -> report.md *.svg

struct CleanResult {
  DailySeries raw;      // parsed input rows, before gap filling and repair
  DailySeries cleaned;  // gap-filled (when allowed) and outlier-repaired
  CalendarReport calendar;
  OutlierReport outliers;
};

CleanResult run_clean(const RunConfig& cfg);

PeriodEstimate run_period(const RunConfig& cfg);

struct FitResult {
  int m = 0;  // season length used by both model families
  TransformChain chain;
  GridReport<SarimaSpec> sarima_grid;
  GridReport<HwesSpec> hwes_grid;
  SarimaFit sarima;
  HwesFit hwes;
  EnsembleModel ensemble;
  // In-sample one-step RMSE on the original scale, over the window where
  // both component models produce fitted values.
  double sarima_rmse = 0.0;
  double hwes_rmse = 0.0;
  double ensemble_rmse = 0.0;
  AdfResult adf_raw;
  AdfResult adf_transformed;
};

FitResult run_fit(const RunConfig& cfg);

struct ModelMetrics {
  std::string model;
  double smape = 0.0;
  double rmse = 0.0;
};

struct EvaluateResult {
  ModelMetrics sarima;
  ModelMetrics hwes;
  ModelMetrics ensemble;
  DailySeries test;
  VectorXd sarima_forecast;
  VectorXd hwes_forecast;
  VectorXd ensemble_forecast;
};

EvaluateResult run_evaluate(const RunConfig& cfg);

void run_report(const RunConfig& cfg);

// Reads a date/value CSV into a series; errors carry the 1-based file row
// and the column name.
DailySeries read_series_csv(const std::string& path, const std::string& date_column,
                            const std::string& value_column);

}  // namespace chronofit
