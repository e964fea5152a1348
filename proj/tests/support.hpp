#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "chronofit/date.hpp"
#include "chronofit/error.hpp"
#include "chronofit/rng.hpp"
#include "chronofit/series.hpp"
#include "chronofit/stats.hpp"

namespace testsupport {

using chronofit::DailySeries;
using chronofit::Rng;
using Eigen::VectorXd;

// True iff fn throws chronofit::Error carrying exactly `expected`.
inline bool throws_code(chronofit::errc expected, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const chronofit::Error& e) {
    return e.code() == expected;
  } catch (...) {
    return false;
  }
  return false;
}

inline chronofit::Date day0() { return chronofit::parse_date("2024-01-01"); }

inline DailySeries make_series(const std::vector<double>& values,
                               const char* start = "2024-01-01") {
  std::vector<chronofit::Date> dates;
  VectorXd v(static_cast<Eigen::Index>(values.size()));
  const chronofit::Date first = chronofit::parse_date(start);
  for (std::size_t i = 0; i < values.size(); ++i) {
    dates.push_back(chronofit::add_days(first, static_cast<int>(i)));
    v[static_cast<Eigen::Index>(i)] = values[i];
  }
  return DailySeries(std::move(dates), std::move(v));
}

inline VectorXd to_vec(const std::vector<double>& values) {
  return Eigen::Map<const VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

// trend + seasonal sine + Gaussian noise, the workhorse synthetic signal.
inline std::vector<double> seasonal_signal(int n, double level, double slope, double amplitude,
                                           double period, double noise_sd, unsigned seed) {
  Rng rng(seed);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    y[static_cast<std::size_t>(t)] = level + slope * t +
                                     amplitude * std::sin(2.0 * std::numbers::pi * t / period) +
                                     rng.normal(0.0, noise_sd);
  }
  return y;
}

inline VectorXd simulate_ar1(int n, double phi, double noise_sd, unsigned seed,
                             int burn_in = 100) {
  Rng rng(seed);
  double x = 0.0;
  for (int t = 0; t < burn_in; ++t) x = phi * x + rng.normal(0.0, noise_sd);
  VectorXd out(n);
  for (int t = 0; t < n; ++t) {
    x = phi * x + rng.normal(0.0, noise_sd);
    out[t] = x;
  }
  return out;
}

// Exhaustive 1-D k-means oracle. Optimal 1-D clusters are contiguous in
// sorted order, so scanning every split-point placement finds the global
// SSE minimum.
inline double brute_force_kmeans_sse(std::vector<double> values, int k) {
  std::sort(values.begin(), values.end());
  const int n = static_cast<int>(values.size());

  // sse(i, j) = within-cluster SSE of sorted points [i, j).
  std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> prefix_sq(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + values[static_cast<std::size_t>(i)];
    prefix_sq[static_cast<std::size_t>(i) + 1] =
        prefix_sq[static_cast<std::size_t>(i)] +
        values[static_cast<std::size_t>(i)] * values[static_cast<std::size_t>(i)];
  }
  auto segment_sse = [&](int i, int j) {
    const double count = j - i;
    const double sum = prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(i)];
    const double sum_sq =
        prefix_sq[static_cast<std::size_t>(j)] - prefix_sq[static_cast<std::size_t>(i)];
    return sum_sq - sum * sum / count;
  };

  // Dynamic program over (clusters used, points consumed).
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best(
      static_cast<std::size_t>(k) + 1, std::vector<double>(static_cast<std::size_t>(n) + 1, inf));
  best[0][0] = 0.0;
  for (int c = 1; c <= k; ++c) {
    for (int j = c; j <= n; ++j) {
      for (int i = c - 1; i < j; ++i) {
        const double candidate = best[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(i)] +
                                 segment_sse(i, j);
        best[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] =
            std::min(best[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)], candidate);
      }
    }
  }
  return best[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

// Cluster-structured random dataset: `sizes.size()` Gaussian blobs with
// well-separated centers; the layout Lloyd's algorithm (with quantile
// initialization) solves to global optimality.
inline std::vector<double> gaussian_blobs(const std::vector<int>& sizes, double min_separation,
                                          double blob_sd, Rng& rng) {
  std::vector<double> centers;
  while (centers.size() < sizes.size()) {
    const double c = rng.uniform() * 30.0;
    bool ok = true;
    for (double existing : centers) {
      if (std::abs(existing - c) < min_separation) ok = false;
    }
    if (ok) centers.push_back(c);
  }
  std::vector<double> points;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (int i = 0; i < sizes[b]; ++i) points.push_back(rng.normal(centers[b], blob_sd));
  }
  return points;
}

}  // namespace testsupport
