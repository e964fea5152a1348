// Regenerates the unit-root-test quantile table: data/adf_quantiles.txt and
// the compiled-in copy src/adf_table.cpp. Simulates the random-walk null
// (standard normal innovations), computes the test statistic with the same
// regression construction the library uses, and tabulates empirical
// quantiles over a dense level grid. Replicate i always uses seed + i, so
// the output is independent of the thread count.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "chronofit/adf.hpp"
#include "chronofit/csv.hpp"
#include "chronofit/rng.hpp"

namespace {

using chronofit::RegressionKind;
using chronofit::Rng;
using chronofit::VectorXd;

std::vector<double> level_grid() {
  std::vector<double> levels = {0.001, 0.0025, 0.005, 0.0075};
  for (int i = 2; i <= 198; ++i) levels.push_back(static_cast<double>(i) / 200.0);
  levels.insert(levels.end(), {0.9925, 0.995, 0.9975, 0.999});
  return levels;
}

std::vector<double> simulate(RegressionKind kind, int replicates, int n, int lags,
                             unsigned seed, int jobs) {
  std::vector<double> stats(static_cast<size_t>(replicates));
  const unsigned base = kind == RegressionKind::Constant ? seed : seed + 1000000u;
  auto worker = [&](int first, int last) {
    for (int i = first; i < last; ++i) {
      Rng rng(base + static_cast<unsigned>(i));
      VectorXd y(n);
      double acc = 0.0;
      for (int t = 0; t < n; ++t) {
        acc += rng.normal();
        y[t] = acc;
      }
      stats[static_cast<size_t>(i)] = chronofit::adf_statistic(y, kind, lags);
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  const int chunk = (replicates + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int first = t * chunk;
    const int last = std::min(replicates, first + chunk);
    if (first < last) pool.emplace_back(worker, first, last);
  }
  for (auto& th : pool) th.join();
  std::sort(stats.begin(), stats.end());
  return stats;
}

// Type-7 empirical quantile of a sorted sample.
double quantile(const std::vector<double>& sorted, double p) {
  const double h = p * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - std::floor(h);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

std::string exact(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate the ADF quantile table"};
  int replicates = 200000;
  int n = 250;
  int lags = 15;
  unsigned seed = 20260825;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::string out_data = "data/adf_quantiles.txt";
  std::string out_src = "src/adf_table.cpp";
  app.add_option("--replicates", replicates, "replicates per regression kind");
  app.add_option("--n", n, "simulated series length");
  app.add_option("--lags", lags, "augmentation lags in the test regression");
  app.add_option("--seed", seed, "base seed (replicate i uses seed + i)");
  app.add_option("--jobs", jobs, "worker threads");
  app.add_option("--out-data", out_data, "quantile text file to write");
  app.add_option("--out-src", out_src, "embedded-table source file to write");
  CLI11_PARSE(app, argc, argv);

  char provenance[256];
  std::snprintf(provenance, sizeof(provenance),
                "Monte Carlo: %d random-walk replicates per regression kind, standard normal "
                "innovations, n=%d, %d augmentation lags, mt19937 seeds %u+i",
                replicates, n, lags, seed);

  const std::vector<double> levels = level_grid();
  std::string data_text;
  data_text += "# Empirical quantiles of the unit-root test statistic under the\n";
  data_text += "# random-walk null. Columns: kind level statistic.\n";
  data_text += std::string("# ") + provenance + "\n";
  std::string rows_constant, rows_trend;

  for (const RegressionKind kind : {RegressionKind::Constant, RegressionKind::ConstantTrend}) {
    const char* kind_name = kind == RegressionKind::Constant ? "constant" : "constant_trend";
    std::cerr << "simulating " << kind_name << "...\n";
    const std::vector<double> stats = simulate(kind, replicates, n, lags, seed, jobs);
    std::string& rows = kind == RegressionKind::Constant ? rows_constant : rows_trend;
    for (const double level : levels) {
      const double q = quantile(stats, level);
      data_text += std::string(kind_name) + " " + exact(level) + " " + exact(q) + "\n";
      rows += "    {" + exact(level) + ", " + exact(q) + "},\n";
    }
  }

  std::string src;
  src += "// Generated by tools/gen_adf_table.cpp; do not edit by hand.\n";
  src += "// Regenerate with: gen_adf_table --out-data data/adf_quantiles.txt "
         "--out-src src/adf_table.cpp\n";
  src += "#include \"chronofit/adf.hpp\"\n\n";
  src += "namespace chronofit::adf_table {\n\n";
  src += "const std::vector<Row>& rows(RegressionKind kind) {\n";
  src += "  static const std::vector<Row> kConstant = {\n" + rows_constant + "  };\n";
  src += "  static const std::vector<Row> kConstantTrend = {\n" + rows_trend + "  };\n";
  src += "  return kind == RegressionKind::Constant ? kConstant : kConstantTrend;\n";
  src += "}\n\n";
  src += "const char* provenance() {\n  return \"" + std::string(provenance) + "\";\n}\n\n";
  src += "}  // namespace chronofit::adf_table\n";

  chronofit::write_text_file(out_data, data_text);
  chronofit::write_text_file(out_src, src);
  std::cerr << "wrote " << out_data << " and " << out_src << "\n";
  return 0;
}
