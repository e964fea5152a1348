#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chronofit/error.hpp"
#include "chronofit/kalman.hpp"
#include "chronofit/stats.hpp"
#include "support.hpp"

using namespace chronofit;

TEST_SUITE("kalman filter") {
  TEST_CASE("constant observations with matching prior stay put") {
    Eigen::VectorXd obs = Eigen::VectorXd::Constant(25, 4.2);
    KalmanParams p;
    p.x0 = 4.2;
    p.q = 0.05;
    p.r = 1.0;
    const KalmanOutput out = kalman_filter(obs, p);
    REQUIRE(out.filtered_means.size() == 25);
    for (int i = 0; i < 25; ++i) {
      CHECK(out.filtered_means[i] == doctest::Approx(4.2).epsilon(1e-12));
    }
    CHECK(out.smoothed_means.size() == 0);  // forward pass only
  }

  TEST_CASE("single observation blends prior and measurement") {
    Eigen::VectorXd obs(1);
    obs << 10.0;
    KalmanParams p;
    p.x0 = 2.0;
    p.p0 = 3.0;
    p.q = 0.0;
    p.r = 1.5;
    const KalmanOutput out = kalman_filter(obs, p);
    // step 0 updates straight from the prior: gain = p0/(p0+r)
    const double gain = 3.0 / (3.0 + 1.5);
    CHECK(out.filtered_means[0] == doctest::Approx(2.0 + gain * (10.0 - 2.0)).epsilon(1e-14));
    CHECK(out.gains[0] == doctest::Approx(gain).epsilon(1e-14));
    CHECK(out.filtered_vars[0] == doctest::Approx((1.0 - gain) * 3.0).epsilon(1e-14));
  }

  TEST_CASE("zero process noise with diffuse prior reduces to running averages") {
    testsupport::Rng rng(31);
    Eigen::VectorXd obs(60);
    for (int i = 0; i < 60; ++i) obs[i] = 7.0 + rng.normal();
    KalmanParams p;
    p.q = 0.0;
    p.r = 1.0;
    p.x0 = 0.0;
    p.p0 = 1e6 * p.r;
    const KalmanOutput out = kalman_filter(obs, p);
    double running = 0.0;
    for (int i = 0; i < 60; ++i) {
      running += (obs[i] - running) / (i + 1);
      CHECK(std::abs(out.filtered_means[i] - running) < 1e-3);
    }
    // later steps forget the prior almost completely
    CHECK(std::abs(out.filtered_means[59] - obs.mean()) < 1e-6);
  }

  TEST_CASE("huge process noise tracks the observations") {
    testsupport::Rng rng(32);
    Eigen::VectorXd obs(50);
    for (int i = 0; i < 50; ++i) obs[i] = 10.0 * rng.uniform();
    KalmanParams p;
    p.r = 1.0;
    p.q = 1e9 * p.r;
    p.x0 = obs[0];
    const KalmanOutput out = kalman_filter(obs, p);
    const double range = obs.maxCoeff() - obs.minCoeff();
    for (int i = 0; i < 50; ++i) {
      CHECK(std::abs(out.filtered_means[i] - obs[i]) < 1e-3 * range);
    }
  }
}

TEST_SUITE("kalman smoother") {
  TEST_CASE("final smoothed state equals final filtered state") {
    testsupport::Rng rng(33);
    Eigen::VectorXd obs(40);
    for (int i = 0; i < 40; ++i) obs[i] = rng.normal(3.0, 2.0);
    const KalmanParams p = default_kalman_params(obs);
    const KalmanOutput out = kalman_smooth(obs, p);
    const Eigen::Index last = obs.size() - 1;
    CHECK(out.smoothed_means[last] == doctest::Approx(out.filtered_means[last]).epsilon(1e-14));
    CHECK(out.smoothed_vars[last] == doctest::Approx(out.filtered_vars[last]).epsilon(1e-14));
  }

  TEST_CASE("smoothing never increases the variance") {
    testsupport::Rng rng(34);
    Eigen::VectorXd obs(80);
    for (int i = 0; i < 80; ++i) obs[i] = std::sin(0.3 * i) + 0.5 * rng.normal();
    const KalmanParams p = default_kalman_params(obs);
    const KalmanOutput out = kalman_smooth(obs, p);
    for (int i = 0; i < 80; ++i) {
      CHECK(out.smoothed_vars[i] <= out.filtered_vars[i] + 1e-12);
      CHECK(out.smoothed_vars[i] > 0.0);
    }
  }

  TEST_CASE("smoothing a noisy sinusoid beats the raw observations") {
    testsupport::Rng rng(35);
    const int n = 120;
    Eigen::VectorXd clean(n), obs(n);
    for (int i = 0; i < n; ++i) {
      clean[i] = 5.0 + 2.0 * std::sin(2.0 * std::numbers::pi * i / 30.0);
      obs[i] = clean[i] + 0.8 * rng.normal();
    }
    const KalmanParams p = default_kalman_params(obs);
    const KalmanOutput out = kalman_smooth(obs, p);
    CHECK(rmse(clean, out.smoothed_means) < rmse(clean, obs));
    // the smoother also improves on the forward-only estimate
    CHECK(rmse(clean, out.smoothed_means) <= rmse(clean, out.filtered_means) + 1e-12);
  }

  TEST_CASE("runs are bit-identical") {
    testsupport::Rng rng(36);
    Eigen::VectorXd obs(50);
    for (int i = 0; i < 50; ++i) obs[i] = rng.normal();
    const KalmanParams p = default_kalman_params(obs);
    const KalmanOutput a = kalman_smooth(obs, p);
    const KalmanOutput b = kalman_smooth(obs, p);
    CHECK((a.smoothed_means - b.smoothed_means).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.filtered_means - b.filtered_means).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("default parameters are data driven") {
    testsupport::Rng rng(37);
    Eigen::VectorXd obs(100);
    for (int i = 0; i < 100; ++i) obs[i] = rng.normal(50.0, 3.0);
    const KalmanParams p = default_kalman_params(obs, 0.2);
    CHECK(p.q == 0.2);
    CHECK(p.x0 == obs[0]);
    CHECK(p.p0 == doctest::Approx(sample_variance(obs)).epsilon(1e-12));
    const Eigen::VectorXd d = obs.tail(99) - obs.head(99);
    CHECK(p.r == doctest::Approx(sample_variance(d) / 2.0).epsilon(1e-12));
  }
}
