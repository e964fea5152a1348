#pragma once

#include <vector>

#include "chronofit/stats.hpp"

namespace chronofit {

struct KMeansResult {
  VectorXd centroids;                  // sorted ascending
  std::vector<int> assignments;        // index into centroids, per input point
  int iterations = 0;
  double sse = 0.0;                    // within-cluster sum of squares
  int lower_rank() const { return 0; }
  int higher_rank() const { return static_cast<int>(centroids.size()) - 1; }
};

// Lloyd's algorithm in one dimension with deterministic quantile
// initialization: centroid j starts at the (j+0.5)/k empirical quantile.
// Ties in the assignment step go to the lower centroid index; a cluster
// that empties keeps its previous centroid. Centroids are sorted (and
// assignments remapped) before returning.
KMeansResult kmeans_1d(VecRef values, int k, int max_iter = 100, double tol = 1e-10);

}  // namespace chronofit
