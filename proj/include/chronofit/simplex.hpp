#pragma once

#include <functional>

#include "chronofit/stats.hpp"

namespace chronofit {

struct SimplexOptions {
  int max_iter = 2000;
  double spread_tol = 1e-10;  // stop when max-min objective over the simplex is below this
  double init_step = 0.1;     // offset used to build the initial simplex
};

struct SimplexResult {
  VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

// Nelder-Mead simplex minimization (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5). Deterministic: no randomized steps.
SimplexResult nelder_mead(const std::function<double(VecRef)>& objective, VecRef start,
                          const SimplexOptions& options = {});

// nelder_mead from `start` and from three deterministic perturbations of it
// (+0.1 everywhere, -0.1 everywhere, alternating +/-0.1), keeping the best
// result. This is the fitting strategy used by the model estimators.
SimplexResult nelder_mead_restarts(const std::function<double(VecRef)>& objective,
                                   VecRef start, const SimplexOptions& options = {});

}  // namespace chronofit
