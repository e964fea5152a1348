#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "chronofit/error.hpp"
#include "chronofit/hwes.hpp"
#include "support.hpp"

using namespace chronofit;
using testsupport::throws_code;
using testsupport::to_vec;

TEST_SUITE("holt-winters recursion") {
  TEST_CASE("two-season trajectory matches the hand computation") {
    // y = [10, 20, 12, 22], m = 2, additive trend and seasonality,
    // alpha = beta = gamma = 0.5; every state below is worked by hand.
    const Eigen::VectorXd y = to_vec({10.0, 20.0, 12.0, 22.0});
    HwesSpec spec;  // defaults are add/add, 0.5 everywhere, m = 2
    const HwesFit fit = hwes_fit(y, spec);

    CHECK(fit.l0 == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(fit.b0 == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(fit.s_init.size() == 2);
    CHECK(fit.s_init[0] == doctest::Approx(-5.0).epsilon(1e-12));
    CHECK(fit.s_init[1] == doctest::Approx(5.0).epsilon(1e-12));

    REQUIRE(fit.fitted.size() == 4);
    CHECK(fit.fitted[0] == doctest::Approx(11.0).epsilon(1e-12));
    CHECK(fit.fitted[1] == doctest::Approx(21.25).epsilon(1e-12));
    CHECK(fit.fitted[2] == doctest::Approx(10.5625).epsilon(1e-12));
    CHECK(fit.fitted[3] == doctest::Approx(21.953125).epsilon(1e-12));

    CHECK(fit.level[3] == doctest::Approx(17.6015625).epsilon(1e-12));
    CHECK(fit.trend[3] == doctest::Approx(0.80859375).epsilon(1e-12));
    CHECK(fit.seasonal[2] == doctest::Approx(-4.78125).epsilon(1e-12));
    CHECK(fit.seasonal[3] == doctest::Approx(4.3984375).epsilon(1e-12));

    const Eigen::VectorXd f = hwes_forecast(fit, 2);
    CHECK(f[0] == doctest::Approx(13.62890625).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(23.6171875).epsilon(1e-12));

    // residuals are observation minus one-step prediction
    for (int t = 0; t < 4; ++t) {
      CHECK(fit.residuals[t] == doctest::Approx(y[t] - fit.fitted[t]).epsilon(1e-14));
    }
    // four points cannot support the m+5 parameter AICc correction
    CHECK(std::isinf(fit.aicc));
    CHECK(fit.sigma2 ==
          doctest::Approx(fit.residuals.squaredNorm() / 4.0).epsilon(1e-14));
  }

  TEST_CASE("alpha one with flat initialization echoes the previous point") {
    // first season constant and second season averaging the same level give
    // b0 = 0 and zero seasonal inits; with alpha = 1, beta = gamma = 0 the
    // one-step prediction is then exactly the previous observation
    const Eigen::VectorXd y = to_vec({10.0, 10.0, 14.0, 6.0, 9.0, 13.0, 7.0});
    HwesSpec spec;
    spec.alpha = 1.0;
    spec.beta = 0.0;
    spec.gamma = 0.0;
    const HwesFit fit = hwes_fit(y, spec);
    CHECK(fit.b0 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(fit.s_init[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(fit.s_init[1] == doctest::Approx(0.0).epsilon(1e-14));
    for (int t = 1; t < 7; ++t) {
      CHECK(fit.fitted[t] == doctest::Approx(y[t - 1]).epsilon(1e-12));
    }
  }

  TEST_CASE("zero seasonal state reduces to holt's linear method") {
    // equal first-season values zero the seasonal inits; gamma = 0 keeps
    // them zero, so the recursion must match plain double smoothing
    const Eigen::VectorXd y = to_vec({5.0, 5.0, 6.5, 7.2, 8.1, 8.8, 9.9, 10.4});
    HwesSpec spec;
    spec.alpha = 0.3;
    spec.beta = 0.2;
    spec.gamma = 0.0;
    const HwesFit fit = hwes_fit(y, spec);

    // hand-rolled Holt recursion with the same initial states
    double l = fit.l0;
    double b = fit.b0;
    for (int t = 0; t < y.size(); ++t) {
      const double predicted = l + b;
      CHECK(fit.fitted[t] == doctest::Approx(predicted).epsilon(1e-12));
      const double l_next = spec.alpha * y[t] + (1.0 - spec.alpha) * (l + b);
      b = spec.beta * (l_next - l) + (1.0 - spec.beta) * b;
      l = l_next;
    }
    const Eigen::VectorXd f = hwes_forecast(fit, 3);
    for (int h = 1; h <= 3; ++h) {
      CHECK(f[h - 1] == doctest::Approx(l + h * b).epsilon(1e-12));
    }
  }

  TEST_CASE("forecast seasonal indices repeat every season") {
    testsupport::Rng rng(71);
    Eigen::VectorXd y(36);
    for (int t = 0; t < 36; ++t) {
      y[t] = 30.0 + 0.1 * t + 3.0 * ((t % 4 == 0) ? 1.0 : -0.3) + 0.1 * rng.normal();
    }
    HwesSpec spec;
    spec.m = 4;
    const HwesFit fit = hwes_fit(y, spec);
    const Eigen::VectorXd f = hwes_forecast(fit, 5);
    const double b = fit.trend[y.size() - 1];
    // steps 1 and m+1 share a seasonal index, so they differ by m trend steps
    CHECK(f[4] - f[0] == doctest::Approx(4.0 * b).epsilon(1e-10));
  }

  TEST_CASE("multiplicative variants stay positive and finite") {
    testsupport::Rng rng(72);
    Eigen::VectorXd y(40);
    for (int t = 0; t < 40; ++t) {
      y[t] = 50.0 * std::pow(1.01, t) * (1.0 + 0.2 * ((t % 5) / 5.0)) + rng.uniform();
    }
    for (HwesKind trend : {HwesKind::Add, HwesKind::Mul}) {
      for (HwesKind seas : {HwesKind::Add, HwesKind::Mul}) {
        HwesSpec spec;
        spec.trend_kind = trend;
        spec.seasonal_kind = seas;
        spec.m = 5;
        spec.alpha = 0.3;
        spec.beta = 0.1;
        spec.gamma = 0.2;
        const HwesFit fit = hwes_fit(y, spec);
        CHECK(fit.fitted.allFinite());
        CHECK(std::isfinite(fit.aicc));
        const Eigen::VectorXd f = hwes_forecast(fit, 10);
        CHECK(f.allFinite());
        if (trend == HwesKind::Mul && seas == HwesKind::Mul) {
          CHECK((f.array() > 0.0).all());
        }
      }
    }
  }

  TEST_CASE("multiplicative needs positive data") {
    HwesSpec spec;
    spec.seasonal_kind = HwesKind::Mul;
    CHECK(throws_code(errc::NonPositiveForMultiplicative, [&] {
      hwes_fit(to_vec({1.0, 2.0, -1.0, 2.0}), spec);
    }));
    spec.seasonal_kind = HwesKind::Add;
    spec.trend_kind = HwesKind::Mul;
    CHECK(throws_code(errc::NonPositiveForMultiplicative, [&] {
      hwes_fit(to_vec({1.0, 2.0, 0.0, 2.0}), spec);
    }));
  }

  TEST_CASE("guards") {
    CHECK(throws_code(errc::SeriesTooShort,
                      [] { hwes_fit(to_vec({1.0, 2.0, 3.0}), HwesSpec{}); }));
    HwesSpec bad;
    bad.alpha = 1.5;
    CHECK(throws_code(errc::InvalidArgument,
                      [&] { hwes_fit(to_vec({1.0, 2.0, 3.0, 4.0}), bad); }));
    bad.alpha = 0.5;
    bad.m = 1;
    CHECK(throws_code(errc::InvalidArgument,
                      [&] { hwes_fit(to_vec({1.0, 2.0, 3.0, 4.0}), bad); }));
    const HwesFit fit = hwes_fit(to_vec({1.0, 2.0, 3.0, 4.0}), HwesSpec{});
    CHECK(throws_code(errc::InvalidArgument, [&] { hwes_forecast(fit, 0); }));
  }

  TEST_CASE("label names the configuration") {
    HwesSpec spec;
    spec.trend_kind = HwesKind::Add;
    spec.seasonal_kind = HwesKind::Mul;
    spec.alpha = 0.1;
    spec.beta = 0.2;
    spec.gamma = 0.3;
    spec.m = 7;
    CHECK(spec.label() == "add/mul a=0.100 b=0.200 g=0.300 m=7");
  }

  TEST_CASE("longer series give a finite information criterion") {
    testsupport::Rng rng(73);
    Eigen::VectorXd y(60);
    for (int t = 0; t < 60; ++t) y[t] = 20.0 + std::sin(t / 3.0) + 0.3 * rng.normal();
    const HwesFit fit = hwes_fit(y, HwesSpec{});
    CHECK(std::isfinite(fit.aicc));
    CHECK(std::isfinite(fit.loglik));
  }
}
