#include "chronofit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "chronofit/error.hpp"

namespace chronofit {

namespace {
constexpr double kWidth = 800.0, kHeight = 420.0;
constexpr double kLeft = 62.0, kRight = 16.0, kTop = 34.0, kBottom = 44.0;

const char* kPalette[] = {"#1f6fb2", "#d1495b", "#3c8d5a", "#8a5ab8", "#c98a2b", "#4a4a4a"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Bounds {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -std::numeric_limits<double>::infinity();
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();
  void expand(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  void finalize() {
    if (!(x_lo <= x_hi)) { x_lo = 0.0; x_hi = 1.0; }
    if (!(y_lo <= y_hi)) { y_lo = 0.0; y_hi = 1.0; }
    if (x_lo == x_hi) { x_lo -= 0.5; x_hi += 0.5; }
    if (y_lo == y_hi) { y_lo -= 0.5; y_hi += 0.5; }
    const double pad = 0.04 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
  }
};
}  // namespace

std::string render_chart(const std::string& title, const std::string& x_label,
                         const std::string& y_label, const std::vector<SvgSeries>& series) {
  Bounds b;
  for (const auto& s : series) {
    for (size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) b.expand(s.xs[i], s.ys[i]);
  }
  b.finalize();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - b.x_lo) / (b.x_hi - b.x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - (y - b.y_lo) / (b.y_hi - b.y_lo)) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";

  // Axes with four ticks per side.
  svg += "<g stroke=\"#333\" stroke-width=\"1\">";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kHeight - kBottom) + "\"/>";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
         num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) + "\"/></g>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = b.x_lo + (b.x_hi - b.x_lo) * t / 4.0;
    const double fy = b.y_lo + (b.y_hi - b.y_lo) * t / 4.0;
    svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kHeight - kBottom + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(fx) + "</text>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 8) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + x_label + "</text>\n";
  svg += "<text x=\"14\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 " +
         num(kTop + plot_h / 2) + ")\">" + y_label + "</text>\n";

  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (s.points_only) {
      std::string pts;
      for (size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
        if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
        pts += "<circle cx=\"" + num(px(s.xs[i])) + "\" cy=\"" + num(py(s.ys[i])) +
               "\" r=\"2.5\" fill=\"" + color + "\"/>";
      }
      svg += pts + "\n";
    } else {
      std::string d;
      bool pen_down = false;
      for (size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
        if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) {
          pen_down = false;
          continue;
        }
        d += (pen_down ? "L" : "M") + num(px(s.xs[i])) + " " + num(py(s.ys[i]));
        pen_down = true;
      }
      svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.4\"/>\n";
    }
    // Legend entry.
    const double ly = kTop + 16.0 * static_cast<double>(si);
    svg += "<rect x=\"" + num(kWidth - kRight - 150) + "\" y=\"" + num(ly) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>";
    svg += "<text x=\"" + num(kWidth - kRight - 136) + "\" y=\"" + num(ly + 9) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_histogram(const std::string& title, const std::vector<double>& values,
                             int bins) {
  if (bins < 1) throw Error(errc::InvalidArgument, "need >= 1 bin");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo <= hi)) { lo = 0.0; hi = 1.0; }
  if (lo == hi) { lo -= 0.5; hi += 0.5; }

  std::vector<double> counts(static_cast<size_t>(bins), 0.0);
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    int bin = static_cast<int>((v - lo) / (hi - lo) * bins);
    bin = std::clamp(bin, 0, bins - 1);
    counts[static_cast<size_t>(bin)] += 1.0;
  }

  SvgSeries steps;
  steps.label = "count";
  for (int i = 0; i < bins; ++i) {
    const double x0 = lo + (hi - lo) * i / bins;
    const double x1 = lo + (hi - lo) * (i + 1) / bins;
    steps.xs.push_back(x0);
    steps.ys.push_back(counts[static_cast<size_t>(i)]);
    steps.xs.push_back(x1);
    steps.ys.push_back(counts[static_cast<size_t>(i)]);
  }
  return render_chart(title, "value", "count", {steps});
}

}  // namespace chronofit
