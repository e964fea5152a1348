#pragma once

#include <string>
#include <vector>

namespace chronofit {

// Tiny deterministic SVG charts for the report (no timestamps, no external
// fonts). NaN values break a line into segments, so series with undefined
// edges render cleanly.
struct SvgSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  bool points_only = false;
};

std::string render_chart(const std::string& title, const std::string& x_label,
                         const std::string& y_label, const std::vector<SvgSeries>& series);

std::string render_histogram(const std::string& title, const std::vector<double>& values,
                             int bins);

}  // namespace chronofit
