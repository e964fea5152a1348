#include "chronofit/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "chronofit/error.hpp"

namespace chronofit {

SimplexResult nelder_mead(const std::function<double(VecRef)>& objective, VecRef start,
                          const SimplexOptions& options) {
  const Eigen::Index dim = start.size();
  if (dim == 0) throw Error(errc::InvalidArgument, "cannot optimize over zero dimensions");

  // Initial simplex: the start plus one vertex per coordinate offset.
  std::vector<VectorXd> verts(static_cast<size_t>(dim) + 1, start);
  for (Eigen::Index j = 0; j < dim; ++j) verts[static_cast<size_t>(j) + 1][j] += options.init_step;
  std::vector<double> vals(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) vals[i] = objective(verts[i]);

  std::vector<size_t> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  auto sort_order = [&]() {
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return vals[a] < vals[b]; });
  };

  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    sort_order();
    const size_t best = order.front();
    const size_t worst = order.back();
    const size_t second_worst = order[order.size() - 2];
    if (vals[worst] - vals[best] < options.spread_tol) break;

    VectorXd centroid = VectorXd::Zero(dim);
    for (size_t i : order) {
      if (i != worst) centroid += verts[i];
    }
    centroid /= static_cast<double>(dim);

    const VectorXd reflected = centroid + (centroid - verts[worst]);
    const double fr = objective(reflected);
    if (fr < vals[best]) {
      const VectorXd expanded = centroid + 2.0 * (centroid - verts[worst]);
      const double fe = objective(expanded);
      if (fe < fr) {
        verts[worst] = expanded;
        vals[worst] = fe;
      } else {
        verts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second_worst]) {
      verts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    const VectorXd contracted = centroid + 0.5 * (verts[worst] - centroid);
    const double fc = objective(contracted);
    if (fc < vals[worst]) {
      verts[worst] = contracted;
      vals[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (size_t i : order) {
      if (i == best) continue;
      verts[i] = verts[best] + 0.5 * (verts[i] - verts[best]);
      vals[i] = objective(verts[i]);
    }
  }

  sort_order();
  SimplexResult result;
  result.x = verts[order.front()];
  result.value = vals[order.front()];
  result.iterations = iter;
  return result;
}

SimplexResult nelder_mead_restarts(const std::function<double(VecRef)>& objective,
                                   VecRef start, const SimplexOptions& options) {
  SimplexResult best = nelder_mead(objective, start, options);
  const Eigen::Index dim = start.size();
  for (int variant = 0; variant < 3; ++variant) {
    VectorXd perturbed = start;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double sign = variant == 0 ? 1.0 : variant == 1 ? -1.0 : (j % 2 == 0 ? 1.0 : -1.0);
      perturbed[j] += sign * 0.1;
    }
    const SimplexResult candidate = nelder_mead(objective, perturbed, options);
    if (candidate.value < best.value) best = candidate;
  }
  return best;
}

}  // namespace chronofit
