#include "chronofit/spline.hpp"

#include <algorithm>
#include <cmath>

#include "chronofit/error.hpp"

namespace chronofit {

namespace {

// Rightmost nonempty span [knots[j], knots[j+1]) containing t; t at the far
// right boundary maps into the last nonempty span so the curve is defined on
// the closed domain.
Eigen::Index find_span(VecRef knots, double t) {
  Eigen::Index lo = 0;
  Eigen::Index hi = knots.size() - 1;
  if (t >= knots[hi]) {
    Eigen::Index j = hi - 1;
    while (j > 0 && knots[j] == knots[hi]) --j;
    return j;
  }
  while (hi - lo > 1) {
    const Eigen::Index mid = (lo + hi) / 2;
    if (t < knots[mid]) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

double basis_impl(VecRef knots, Eigen::Index i, int k, double t) {
  if (k == 0) {
    if (knots[i] <= t && t < knots[i + 1]) return 1.0;
    // Closed right end of the overall domain.
    const double t_max = knots[knots.size() - 1];
    if (t == t_max && knots[i + 1] == t_max && knots[i] < knots[i + 1]) return 1.0;
    return 0.0;
  }
  double left = 0.0;
  const double dl = knots[i + k] - knots[i];
  if (dl > 0.0) left = (t - knots[i]) / dl * basis_impl(knots, i, k - 1, t);
  double right = 0.0;
  const double dr = knots[i + k + 1] - knots[i + 1];
  if (dr > 0.0) right = (knots[i + k + 1] - t) / dr * basis_impl(knots, i + 1, k - 1, t);
  return left + right;
}

double basis_derivative(VecRef knots, Eigen::Index i, int k, double t, int order) {
  if (order == 0) return basis_impl(knots, i, k, t);
  if (k == 0) return 0.0;
  double left = 0.0;
  const double dl = knots[i + k] - knots[i];
  if (dl > 0.0) {
    left = static_cast<double>(k) / dl * basis_derivative(knots, i, k - 1, t, order - 1);
  }
  double right = 0.0;
  const double dr = knots[i + k + 1] - knots[i + 1];
  if (dr > 0.0) {
    right = static_cast<double>(k) / dr * basis_derivative(knots, i + 1, k - 1, t, order - 1);
  }
  return left - right;
}

void check_sites(VecRef xs, VecRef ys) {
  if (xs.size() != ys.size()) {
    throw Error(errc::LengthMismatch,
                std::to_string(xs.size()) + " abscissae vs " + std::to_string(ys.size()) +
                    " ordinates");
  }
  if (xs.size() < 4) {
    throw Error(errc::TooFewPoints, "cubic spline needs >= 4 points, got " +
                                        std::to_string(xs.size()));
  }
  for (Eigen::Index i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw Error(errc::UnsortedAbscissae, "abscissae must be strictly increasing");
    }
  }
}

VectorXd clamped_knots(VecRef xs, const std::vector<double>& interior) {
  VectorXd knots(8 + interior.size());
  for (int i = 0; i < 4; ++i) knots[i] = xs[0];
  for (size_t i = 0; i < interior.size(); ++i) knots[4 + i] = interior[i];
  for (int i = 0; i < 4; ++i) knots[4 + interior.size() + i] = xs[xs.size() - 1];
  return knots;
}

double eval_on(VecRef knots, VecRef coefficients, double t, int order) {
  const Eigen::Index span = find_span(knots, t);
  double acc = 0.0;
  for (Eigen::Index i = std::max<Eigen::Index>(0, span - 3);
       i <= std::min<Eigen::Index>(coefficients.size() - 1, span); ++i) {
    const double b = order == 0 ? basis_impl(knots, i, 3, t)
                                : basis_derivative(knots, i, 3, t, order);
    acc += coefficients[i] * b;
  }
  return acc;
}

}  // namespace

double bspline_basis(VecRef knots, int i, int k, double t) {
  if (i < 0 || k < 0 || static_cast<Eigen::Index>(i) + k + 1 >= knots.size()) {
    throw Error(errc::InvalidArgument, "basis index out of range");
  }
  return basis_impl(knots, i, k, t);
}

Spline fit_cubic_spline(VecRef xs, VecRef ys) {
  check_sites(xs, ys);
  const Eigen::Index n = xs.size();

  std::vector<double> interior(xs.data() + 1, xs.data() + n - 1);
  Spline sp;
  sp.knots = clamped_knots(xs, interior);
  const Eigen::Index ncoef = n + 2;

  // Interpolation conditions at every site plus a natural (zero second
  // derivative) condition at each end close the (n+2)-unknown system.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ncoef, ncoef);
  VectorXd rhs = VectorXd::Zero(ncoef);
  for (Eigen::Index c = 0; c < ncoef; ++c) {
    a(0, c) = basis_derivative(sp.knots, c, 3, xs[0], 2);
    a(ncoef - 1, c) = basis_derivative(sp.knots, c, 3, xs[n - 1], 2);
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < ncoef; ++c) a(r + 1, c) = basis_impl(sp.knots, c, 3, xs[r]);
    rhs[r + 1] = ys[r];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < ncoef) {
    throw Error(errc::SingularDesign, "spline interpolation system is singular");
  }
  sp.coefficients = qr.solve(rhs);
  return sp;
}

Spline fit_lsq_spline(VecRef xs, VecRef ys, int knot_step) {
  check_sites(xs, ys);
  if (knot_step < 1) throw Error(errc::InvalidArgument, "knot_step must be >= 1");
  const Eigen::Index n = xs.size();

  // Interior knots at every knot_step-th site, keeping a guard band of
  // knot_step sites at each end; too few points leaves a single cubic.
  std::vector<double> interior;
  for (Eigen::Index j = knot_step; j < n - knot_step; j += knot_step) {
    interior.push_back(xs[j]);
  }

  Spline sp;
  sp.knots = clamped_knots(xs, interior);
  const Eigen::Index ncoef = static_cast<Eigen::Index>(interior.size()) + 4;

  Eigen::MatrixXd a(n, ncoef);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < ncoef; ++c) a(r, c) = basis_impl(sp.knots, c, 3, xs[r]);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < ncoef) {
    throw Error(errc::SingularDesign, "spline least-squares design is rank deficient");
  }
  sp.coefficients = qr.solve(ys);
  return sp;
}

double eval_spline(const Spline& sp, double t) {
  if (t < sp.t_min() || t > sp.t_max()) {
    throw Error(errc::OutOfDomain, "parameter " + std::to_string(t) + " outside [" +
                                       std::to_string(sp.t_min()) + ", " +
                                       std::to_string(sp.t_max()) + "]");
  }
  return eval_on(sp.knots, sp.coefficients, t, 0);
}

double eval_spline_derivative(const Spline& sp, double t, int order) {
  if (order < 1) throw Error(errc::InvalidArgument, "derivative order must be >= 1");
  if (t < sp.t_min() || t > sp.t_max()) {
    throw Error(errc::OutOfDomain, "parameter outside the spline domain");
  }
  return eval_on(sp.knots, sp.coefficients, t, order);
}

std::vector<double> find_extrema(const Spline& sp, ExtremumKind kind, double grid_step,
                                 double tol) {
  const double lo = sp.t_min();
  const double hi = sp.t_max();
  std::vector<double> ts;
  for (double t = lo; t < hi; t += grid_step) ts.push_back(t);
  ts.push_back(hi);

  std::vector<double> deriv(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) deriv[i] = eval_spline_derivative(sp, ts[i], 1);

  auto bisect = [&](double a, double b, double da) {
    while (b - a > tol) {
      const double mid = (a + b) / 2.0;
      const double dm = eval_spline_derivative(sp, mid, 1);
      if (dm == 0.0) return mid;
      if ((dm > 0.0) == (da > 0.0)) {
        a = mid;
        da = dm;
      } else {
        b = mid;
      }
    }
    return (a + b) / 2.0;
  };

  std::vector<double> found;
  size_t prev = ts.size();  // last index with a nonzero derivative
  for (size_t i = 0; i < ts.size(); ++i) {
    if (deriv[i] == 0.0) continue;
    if (prev != ts.size() && (deriv[prev] > 0.0) != (deriv[i] > 0.0)) {
      const bool is_max = deriv[prev] > 0.0;
      if ((kind == ExtremumKind::Maxima) == is_max) {
        if (i == prev + 1) {
          found.push_back(bisect(ts[prev], ts[i], deriv[prev]));
        } else {
          // A run of exactly-zero samples between the sign change: take its
          // center, where the derivative already vanishes.
          found.push_back((ts[prev + 1] + ts[i - 1]) / 2.0);
        }
      }
    }
    prev = i;
  }
  return found;
}

}  // namespace chronofit
