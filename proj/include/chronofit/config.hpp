#pragma once

#include <optional>
#include <string>

#include "chronofit/period.hpp"
#include "chronofit/search.hpp"

namespace chronofit {

// Everything a pipeline run needs; loaded from a JSON config file and
// overridable per-field by CLI flags. See the README for the schema.
struct RunConfig {
  std::string input_path;
  std::string date_column = "date";
  std::string value_column = "value";
  std::string output_dir = "out";

  std::optional<std::string> train_cutoff_date;  // ISO date; <= cutoff trains
  std::optional<std::string> test_path;          // explicit test CSV for evaluate
  double validation_fraction = 0.05;
  double zscore_threshold = 3.0;
  bool allow_gaps = false;

  PeriodConfig period;
  std::optional<int> period_override;
  bool skip_period = false;

  SarimaGridRanges sarima_ranges;
  Weights sarima_weights{0.6, 0.4};
  HwesGridRanges hwes_ranges;
  Weights hwes_weights{0.8, 0.2};
  bool normalize_combined = false;

  int jobs = 0;  // 0: use the hardware concurrency
  unsigned seed = 42;

  int effective_jobs() const;
};

RunConfig load_config(const std::string& path);

// Parses the JSON text (object may cover any subset of the keys) over a
// default-constructed config.
RunConfig parse_config(const std::string& json_text);

}  // namespace chronofit
