#include "chronofit/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chronofit/error.hpp"

namespace chronofit {

namespace {
// Linearly interpolated empirical quantile (the h = (n-1)p convention).
double quantile(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = static_cast<size_t>(std::ceil(h));
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}
}  // namespace

KMeansResult kmeans_1d(VecRef values, int k, int max_iter, double tol) {
  const Eigen::Index n = values.size();
  if (k < 1) throw Error(errc::InvalidArgument, "k must be >= 1");
  std::set<double> distinct(values.data(), values.data() + n);
  if (static_cast<int>(distinct.size()) < k) {
    throw Error(errc::TooFewDistinctValues,
                std::to_string(distinct.size()) + " distinct values for k = " + std::to_string(k));
  }

  std::vector<double> sorted(values.data(), values.data() + n);
  std::sort(sorted.begin(), sorted.end());

  VectorXd centroids(k);
  for (int j = 0; j < k; ++j) {
    centroids[j] = quantile(sorted, (static_cast<double>(j) + 0.5) / static_cast<double>(k));
  }

  std::vector<int> assign(static_cast<size_t>(n), 0);
  int iterations = 0;
  for (; iterations < max_iter; ++iterations) {
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::abs(values[i] - centroids[0]);
      for (int j = 1; j < k; ++j) {
        const double d = std::abs(values[i] - centroids[j]);
        if (d < best_d) {  // strict: ties stay with the lower index
          best_d = d;
          best = j;
        }
      }
      assign[static_cast<size_t>(i)] = best;
    }
    VectorXd sums = VectorXd::Zero(k);
    VectorXd counts = VectorXd::Zero(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums[assign[static_cast<size_t>(i)]] += values[i];
      counts[assign[static_cast<size_t>(i)]] += 1.0;
    }
    double movement = 0.0;
    for (int j = 0; j < k; ++j) {
      if (counts[j] == 0.0) continue;  // empty cluster keeps its centroid
      const double next = sums[j] / counts[j];
      movement = std::max(movement, std::abs(next - centroids[j]));
      centroids[j] = next;
    }
    if (movement < tol) {
      ++iterations;
      break;
    }
  }

  // Sort centroids ascending, then assign once more against the sorted
  // centroids so the tie rule (lower rank wins) holds exactly in the output.
  std::sort(centroids.data(), centroids.data() + k);

  KMeansResult result;
  result.centroids = std::move(centroids);
  result.assignments.resize(static_cast<size_t>(n));
  result.iterations = iterations;
  for (Eigen::Index i = 0; i < n; ++i) {
    int best = 0;
    double best_d = std::abs(values[i] - result.centroids[0]);
    for (int j = 1; j < k; ++j) {
      const double d = std::abs(values[i] - result.centroids[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    result.assignments[static_cast<size_t>(i)] = best;
    const double diff = values[i] - result.centroids[best];
    result.sse += diff * diff;
  }
  return result;
}

}  // namespace chronofit
