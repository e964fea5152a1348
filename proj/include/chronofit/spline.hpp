#pragma once

#include <vector>

#include "chronofit/stats.hpp"

namespace chronofit {

// Cubic curve in the B-spline basis:
//
//   C(t) = sum_i N_{i,3}(t) * P_i
//
// where N_{i,0}(t) = 1 on [t_i, t_{i+1}) and the usual degree-raising
// recursion defines N_{i,k}; 0/0 terms in the recursion are taken as 0.
// Knots are clamped (first and last values repeated degree+1 times), so the
// domain is [knots.front(), knots.back()] and the curve interpolates its
// first and last coefficients at the ends.
struct Spline {
  VectorXd knots;
  VectorXd coefficients;
  static constexpr int degree = 3;
  double t_min() const { return knots[0]; }
  double t_max() const { return knots[knots.size() - 1]; }
};

// Value of the basis function N_{i,k} on the given knot vector. Exposed for
// property tests (partition of unity); evaluation goes through eval_spline.
double bspline_basis(VecRef knots, int i, int k, double t);

// Interpolating cubic spline through (xs, ys): clamped ends, interior knots
// at the data sites, natural end conditions (zero second derivative) closing
// the system. Needs >= 4 points.
Spline fit_cubic_spline(VecRef xs, VecRef ys);

// Least-squares cubic spline: clamped ends, interior knots at every
// `knot_step`-th data site (with a guard band of knot_step sites at each
// end). Falls back to a single cubic segment when the sites are too few or
// too close. Needs >= 4 points.
Spline fit_lsq_spline(VecRef xs, VecRef ys, int knot_step = 3);

double eval_spline(const Spline& sp, double t);
// order-th derivative (order >= 1) by the degree-lowering formula.
double eval_spline_derivative(const Spline& sp, double t, int order = 1);

enum class ExtremumKind { Maxima, Minima };

// Local extrema of the spline: sample the first derivative every 0.1 day,
// bracket sign changes, refine each bracket by bisection to 1e-6 day, and
// classify by the derivative's direction of crossing. Returns ascending
// positions; empty when the spline is monotone.
std::vector<double> find_extrema(const Spline& sp, ExtremumKind kind,
                                 double grid_step = 0.1, double tol = 1e-6);

}  // namespace chronofit
