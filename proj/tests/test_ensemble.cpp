#include <doctest.h>

#include <cmath>
#include <vector>

#include "chronofit/ensemble.hpp"
#include "chronofit/error.hpp"
#include "support.hpp"

using namespace chronofit;
using testsupport::throws_code;
using testsupport::to_vec;

TEST_SUITE("ols stacking") {
  TEST_CASE("recovers an exact linear combination") {
    // y = 2 + 3 x1 exactly, x2 carries independent information but weight 0
    testsupport::Rng rng(301);
    const int n = 40;
    Eigen::VectorXd x1(n), x2(n), y(n);
    for (int i = 0; i < n; ++i) {
      x1[i] = rng.uniform() * 10.0;
      x2[i] = rng.normal();
      y[i] = 2.0 + 3.0 * x1[i];
    }
    const EnsembleModel m = ols_fit(y, x1, x2);
    CHECK(std::abs(m.beta0 - 2.0) < 1e-9);
    CHECK(std::abs(m.beta1 - 3.0) < 1e-9);
    CHECK(std::abs(m.beta2) < 1e-9);
    CHECK(m.training_residual_rmse < 1e-9);
  }

  TEST_CASE("three points, exact-fit oracle") {
    // Design [1, x1, x2] with rows (1,1,0),(1,1,1),(1,2,1) is invertible;
    // solving by hand gives beta = (0, 1, 1).
    const auto y = to_vec({1.0, 2.0, 3.0});
    const auto x1 = to_vec({1.0, 1.0, 2.0});
    const auto x2 = to_vec({0.0, 1.0, 1.0});
    const EnsembleModel m = ols_fit(y, x1, x2);
    CHECK(std::abs(m.beta0 - 0.0) < 1e-12);
    CHECK(std::abs(m.beta1 - 1.0) < 1e-12);
    CHECK(std::abs(m.beta2 - 1.0) < 1e-12);
    CHECK(m.training_residual_rmse < 1e-12);
  }

  TEST_CASE("in-sample RMSE never above either component alone") {
    // Least squares over span{1, x1, x2} cannot do worse than the point
    // x1 (or x2) itself, which lies inside that span.
    testsupport::Rng rng(302);
    const int n = 120;
    Eigen::VectorXd truth(n), x1(n), x2(n);
    for (int i = 0; i < n; ++i) {
      truth[i] = 10.0 + 0.05 * i + rng.normal(0.0, 1.0);
      x1[i] = truth[i] + rng.normal(0.0, 0.8);
      x2[i] = truth[i] + rng.normal(0.0, 1.4);
    }
    const EnsembleModel m = ols_fit(truth, x1, x2);
    const Eigen::VectorXd stacked =
        (m.beta0 + m.beta1 * x1.array() + m.beta2 * x2.array()).matrix();
    const double rmse_stack = rmse(truth, stacked);
    CHECK(std::abs(rmse_stack - m.training_residual_rmse) < 1e-12);
    CHECK(rmse_stack <= rmse(truth, x1) + 1e-9);
    CHECK(rmse_stack <= rmse(truth, x2) + 1e-9);
  }

  TEST_CASE("affine response transforms map through the coefficients") {
    testsupport::Rng rng(303);
    const int n = 60;
    Eigen::VectorXd y(n), x1(n), x2(n);
    for (int i = 0; i < n; ++i) {
      x1[i] = rng.normal(5.0, 2.0);
      x2[i] = rng.normal(-1.0, 1.0);
      y[i] = 4.0 + 0.7 * x1[i] - 1.2 * x2[i] + rng.normal(0.0, 0.3);
    }
    const EnsembleModel base = ols_fit(y, x1, x2);
    const double a = 2.5, b = -7.0;
    const EnsembleModel scaled = ols_fit((a * y.array() + b).matrix(), x1, x2);
    CHECK(scaled.beta0 == doctest::Approx(a * base.beta0 + b).epsilon(1e-10));
    CHECK(scaled.beta1 == doctest::Approx(a * base.beta1).epsilon(1e-10));
    CHECK(scaled.beta2 == doctest::Approx(a * base.beta2).epsilon(1e-10));
    CHECK(scaled.training_residual_rmse ==
          doctest::Approx(std::abs(a) * base.training_residual_rmse).epsilon(1e-10));
  }

  TEST_CASE("swapping the regressors swaps the slopes") {
    testsupport::Rng rng(304);
    const int n = 50;
    Eigen::VectorXd y(n), x1(n), x2(n);
    for (int i = 0; i < n; ++i) {
      x1[i] = rng.uniform();
      x2[i] = rng.normal();
      y[i] = 1.0 + 2.0 * x1[i] + 0.5 * x2[i] + rng.normal(0.0, 0.1);
    }
    const EnsembleModel ab = ols_fit(y, x1, x2);
    const EnsembleModel ba = ols_fit(y, x2, x1);
    CHECK(ab.beta0 == doctest::Approx(ba.beta0).epsilon(1e-10));
    CHECK(ab.beta1 == doctest::Approx(ba.beta2).epsilon(1e-10));
    CHECK(ab.beta2 == doctest::Approx(ba.beta1).epsilon(1e-10));
    CHECK(ab.training_residual_rmse ==
          doctest::Approx(ba.training_residual_rmse).epsilon(1e-12));
  }

  TEST_CASE("residuals are orthogonal to every design column") {
    testsupport::Rng rng(305);
    const int n = 80;
    Eigen::VectorXd y(n), x1(n), x2(n);
    for (int i = 0; i < n; ++i) {
      x1[i] = rng.normal(0.0, 3.0);
      x2[i] = rng.normal(2.0, 1.0);
      y[i] = -1.0 + 0.4 * x1[i] + 0.9 * x2[i] + rng.normal(0.0, 2.0);
    }
    const EnsembleModel m = ols_fit(y, x1, x2);
    const Eigen::VectorXd resid =
        y - (m.beta0 + m.beta1 * x1.array() + m.beta2 * x2.array()).matrix();
    const double scale = std::sqrt(static_cast<double>(n)) * resid.norm() + 1e-30;
    CHECK(std::abs(resid.sum()) / scale < 1e-6);
    CHECK(std::abs(resid.dot(x1)) / (scale * x1.norm()) < 1e-6);
    CHECK(std::abs(resid.dot(x2)) / (scale * x2.norm()) < 1e-6);
  }

  TEST_CASE("rank-deficient designs are rejected") {
    testsupport::Rng rng(306);
    const int n = 30;
    Eigen::VectorXd y(n), x1(n);
    for (int i = 0; i < n; ++i) {
      x1[i] = rng.normal();
      y[i] = x1[i] + rng.normal(0.0, 0.2);
    }
    // duplicate regressor
    CHECK(throws_code(errc::RankDeficientDesign, [&] { ols_fit(y, x1, x1); }));
    // regressor collinear with the intercept column
    const Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 4.0);
    CHECK(throws_code(errc::RankDeficientDesign, [&] { ols_fit(y, x1, ones); }));
    // exact affine dependence x2 = 2 x1 + 1
    const Eigen::VectorXd affine = (2.0 * x1.array() + 1.0).matrix();
    CHECK(throws_code(errc::RankDeficientDesign, [&] { ols_fit(y, x1, affine); }));
  }

  TEST_CASE("input guards") {
    const auto y = to_vec({1.0, 2.0, 3.0, 4.0});
    const auto x_short = to_vec({1.0, 2.0});
    CHECK(throws_code(errc::LengthMismatch, [&] { ols_fit(y, x_short, y); }));
    CHECK(throws_code(errc::LengthMismatch, [&] { ols_fit(y, y, x_short); }));
    const auto two_y = to_vec({1.0, 2.0});
    const auto two_a = to_vec({0.0, 1.0});
    const auto two_b = to_vec({1.0, 0.0});
    CHECK(throws_code(errc::SeriesTooShort, [&] { ols_fit(two_y, two_a, two_b); }));
  }
}

TEST_SUITE("ensemble forecast") {
  TEST_CASE("applies the stacking coefficients to new component forecasts") {
    EnsembleModel m;
    m.beta0 = 38.34;
    m.beta1 = -0.66;
    m.beta2 = 0.24;
    const Eigen::VectorXd out = ensemble_forecast(m, to_vec({28.0}), to_vec({29.0}));
    REQUIRE(out.size() == 1);
    // 38.34 - 0.66*28 + 0.24*29 = 38.34 - 18.48 + 6.96
    CHECK(std::abs(out[0] - 26.82) < 1e-12);
  }

  TEST_CASE("identity and constant weight vectors") {
    const auto f1 = to_vec({10.0, 11.0, 12.0});
    const auto f2 = to_vec({-3.0, 0.0, 5.0});

    EnsembleModel pass_first;
    pass_first.beta0 = 0.0;
    pass_first.beta1 = 1.0;
    pass_first.beta2 = 0.0;
    const Eigen::VectorXd first = ensemble_forecast(pass_first, f1, f2);
    for (int i = 0; i < 3; ++i) CHECK(first[i] == f1[i]);

    EnsembleModel constant;
    constant.beta0 = 7.5;
    const Eigen::VectorXd flat = ensemble_forecast(constant, f1, f2);
    for (int i = 0; i < 3; ++i) CHECK(flat[i] == 7.5);
  }

  TEST_CASE("component length mismatch is rejected") {
    EnsembleModel m;
    CHECK(throws_code(errc::LengthMismatch, [&] {
      ensemble_forecast(m, to_vec({1.0, 2.0}), to_vec({1.0}));
    }));
  }

  TEST_CASE("fit then forecast round-trips the training rows") {
    testsupport::Rng rng(307);
    const int n = 25;
    Eigen::VectorXd y(n), x1(n), x2(n);
    for (int i = 0; i < n; ++i) {
      x1[i] = rng.normal(10.0, 2.0);
      x2[i] = rng.normal(20.0, 3.0);
      y[i] = 5.0 + 0.3 * x1[i] + 0.6 * x2[i] + rng.normal(0.0, 0.5);
    }
    const EnsembleModel m = ols_fit(y, x1, x2);
    const Eigen::VectorXd fitted = ensemble_forecast(m, x1, x2);
    const Eigen::VectorXd direct =
        (m.beta0 + m.beta1 * x1.array() + m.beta2 * x2.array()).matrix();
    for (int i = 0; i < n; ++i) CHECK(std::abs(fitted[i] - direct[i]) < 1e-12);
  }
}
