#include <doctest.h>

#include <cmath>
#include <vector>

#include "chronofit/error.hpp"
#include "chronofit/preprocess.hpp"
#include "support.hpp"

using namespace chronofit;
using testsupport::make_series;
using testsupport::throws_code;

TEST_SUITE("outlier detection") {
  TEST_CASE("point at the mean is never flagged") {
    const DailySeries s = make_series({10.0, 20.0, 30.0, 20.0, 20.0});
    const OutlierReport r = detect_outliers_zscore(s, 0.5);
    for (Eigen::Index idx : r.indices) CHECK(s.values()[idx] != 20.0);
  }

  TEST_CASE("large negative excursion is flagged with its z-score") {
    // 21 points arranged so the sample mean is 28.64, the sample sd is
    // about 1.69, and the dip to 22.3 sits 3.75 sds below the mean.
    std::vector<double> v;
    for (int i = 0; i < 10; ++i) {
      v.push_back(29.822);
      v.push_back(28.092);
    }
    v.insert(v.begin() + 10, 22.3);
    const DailySeries s = make_series(v);
    const double mu = s.values().mean();
    const double sd = sample_sd(s.values());
    CHECK(mu == doctest::Approx(28.64).epsilon(1e-9));
    CHECK(sd == doctest::Approx(1.6907).epsilon(1e-4));

    const OutlierReport r = detect_outliers_zscore(s, 3.0);
    REQUIRE(r.indices.size() == 1);
    CHECK(r.indices[0] == 10);
    CHECK(r.zscores[0] == doctest::Approx(-3.75).epsilon(1e-3));
    CHECK(r.zscores[0] == doctest::Approx((22.3 - mu) / sd).epsilon(1e-12));
    CHECK(r.threshold == 3.0);
  }

  TEST_CASE("constant series has no z-scores") {
    CHECK(throws_code(errc::ZeroVariance, [] {
      detect_outliers_zscore(make_series({5.0, 5.0, 5.0, 5.0}), 3.0);
    }));
  }

  TEST_CASE("flag set is invariant under affine rescaling") {
    std::vector<double> base = {1.0, 2.0, 1.5, 9.0, 2.2, 1.8, 2.1, 1.9};
    const OutlierReport r1 = detect_outliers_zscore(make_series(base), 2.0);
    std::vector<double> scaled;
    for (double x : base) scaled.push_back(100.0 * x - 42.0);
    const OutlierReport r2 = detect_outliers_zscore(make_series(scaled), 2.0);
    CHECK(r1.indices == r2.indices);
    REQUIRE(r1.zscores.size() == r2.zscores.size());
    for (size_t i = 0; i < r1.zscores.size(); ++i) {
      CHECK(r1.zscores[i] == doctest::Approx(r2.zscores[i]).epsilon(1e-12));
    }
  }

  TEST_CASE("guards") {
    CHECK(throws_code(errc::SeriesTooShort,
                      [] { detect_outliers_zscore(make_series({1.0}), 3.0); }));
    CHECK(throws_code(errc::InvalidArgument,
                      [] { detect_outliers_zscore(make_series({1.0, 2.0}), 0.0); }));
  }
}

TEST_SUITE("linear repair") {
  TEST_CASE("interior flag becomes the neighbor midpoint") {
    const DailySeries fixed = repair_linear(make_series({10.0, 100.0, 20.0}), {1});
    CHECK(fixed.values()[1] == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(fixed.values()[0] == 10.0);
    CHECK(fixed.values()[2] == 20.0);
  }

  TEST_CASE("adjacent flags interpolate along one segment") {
    // endpoints (0, 1) and (3, 7): the line gives 3 and 5 in between
    const DailySeries fixed = repair_linear(make_series({1.0, 50.0, -9.0, 7.0}), {1, 2});
    CHECK(fixed.values()[1] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(fixed.values()[2] == doctest::Approx(5.0).epsilon(1e-15));
  }

  TEST_CASE("boundary flags copy the nearest unflagged value") {
    const DailySeries left = repair_linear(make_series({99.0, 2.0, 3.0}), {0});
    CHECK(left.values()[0] == 2.0);
    const DailySeries right = repair_linear(make_series({1.0, 2.0, 99.0}), {2});
    CHECK(right.values()[2] == 2.0);
    const DailySeries both = repair_linear(make_series({99.0, 98.0, 2.0, 3.0}), {0, 1});
    CHECK(both.values()[0] == 2.0);
    CHECK(both.values()[1] == 2.0);
  }

  TEST_CASE("repair is idempotent") {
    const DailySeries s = make_series({1.0, 50.0, -9.0, 7.0, 2.0});
    const std::vector<Eigen::Index> flags = {1, 2};
    const DailySeries once = repair_linear(s, flags);
    const DailySeries twice = repair_linear(once, flags);
    CHECK((once.values() - twice.values()).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("no flags leaves the series untouched") {
    const DailySeries s = make_series({1.0, 2.0, 3.0});
    const DailySeries out = repair_linear(s, {});
    CHECK((out.values() - s.values()).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("needs two unflagged support points") {
    CHECK(throws_code(errc::TooFewSupportPoints,
                      [] { repair_linear(make_series({1.0, 2.0, 3.0}), {0, 1, 2}); }));
    CHECK(throws_code(errc::TooFewSupportPoints,
                      [] { repair_linear(make_series({1.0, 2.0, 3.0}), {0, 2}); }));
    CHECK(throws_code(errc::InvalidArgument,
                      [] { repair_linear(make_series({1.0, 2.0, 3.0}), {7}); }));
  }
}

TEST_SUITE("log10 transform") {
  TEST_CASE("known decades") {
    const TransformedSeries t = apply_log10(make_series({1.0, 10.0, 100.0}));
    CHECK(t.series.values()[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(t.series.values()[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t.series.values()[2] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t.series.size() == 3);  // length preserved, no anchors consumed
    CHECK(t.step.anchors.empty());
  }

  TEST_CASE("specific value") {
    const TransformedSeries t = apply_log10(make_series({28.64}));
    CHECK(t.series.values()[0] == doctest::Approx(std::log10(28.64)).epsilon(1e-15));
    CHECK(t.series.values()[0] == doctest::Approx(1.45697).epsilon(1e-5));
  }

  TEST_CASE("rejects non-positive input") {
    CHECK(throws_code(errc::NonPositiveValue, [] { apply_log10(make_series({1.0, 0.0})); }));
    CHECK(throws_code(errc::NonPositiveValue, [] { apply_log10(make_series({1.0, -3.0})); }));
  }
}

TEST_SUITE("difference transform") {
  TEST_CASE("first differences") {
    const TransformedSeries t = apply_difference(make_series({1.0, 3.0, 6.0, 10.0}), 1);
    REQUIRE(t.series.size() == 3);
    CHECK(t.series.values()[0] == 2.0);
    CHECK(t.series.values()[1] == 3.0);
    CHECK(t.series.values()[2] == 4.0);
    REQUIRE(t.step.anchors.size() == 1);
    CHECK(t.step.anchors[0] == 1.0);
    CHECK(format_date(t.series.front_date()) == "2024-01-02");  // first date consumed
  }

  TEST_CASE("second differences") {
    const TransformedSeries t = apply_difference(make_series({1.0, 3.0, 6.0, 10.0}), 2);
    REQUIRE(t.series.size() == 2);
    CHECK(t.series.values()[0] == 1.0);
    CHECK(t.series.values()[1] == 1.0);
    CHECK(t.step.anchors.size() == 2);   // one anchor per pass
    CHECK(t.step.anchors[0] == 1.0);     // head of the original
    CHECK(t.step.anchors[1] == 2.0);     // head of the first-difference series
  }

  TEST_CASE("constant series differences to zero") {
    const TransformedSeries t = apply_difference(make_series({7.0, 7.0, 7.0, 7.0}), 1);
    CHECK(t.series.values().cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("guards") {
    CHECK(throws_code(errc::SeriesTooShort,
                      [] { apply_difference(make_series({1.0, 2.0}), 2); }));
    CHECK(throws_code(errc::InvalidArgument,
                      [] { apply_difference(make_series({1.0, 2.0}), 0); }));
  }
}

TEST_SUITE("percent-change transform") {
  TEST_CASE("relative steps") {
    const TransformedSeries t = apply_percent_change(make_series({100.0, 110.0, 99.0}));
    REQUIRE(t.series.size() == 2);
    CHECK(t.series.values()[0] == doctest::Approx(0.10).epsilon(1e-12));
    CHECK(t.series.values()[1] == doctest::Approx(-0.10).epsilon(1e-12));
    REQUIRE(t.step.anchors.size() == 1);
    CHECK(t.step.anchors[0] == 100.0);
  }

  TEST_CASE("zero denominator rejected") {
    CHECK(throws_code(errc::DivisionByZeroValue,
                      [] { apply_percent_change(make_series({2.0, 0.0, 3.0})); }));
    // a zero in the final slot is never a denominator
    const TransformedSeries t = apply_percent_change(make_series({2.0, 4.0, 0.0}));
    CHECK(t.series.values()[1] == doctest::Approx(-1.0).epsilon(1e-15));
  }

  TEST_CASE("needs two points") {
    CHECK(throws_code(errc::SeriesTooShort,
                      [] { apply_percent_change(make_series({2.0})); }));
  }
}

TEST_SUITE("chain inversion") {
  TEST_CASE("cumulative sum from an anchor") {
    TransformChain chain;
    TransformStep step;
    step.kind = TransformStep::Kind::Difference;
    step.order = 1;
    step.anchors = {1.0};
    chain.steps.push_back(step);
    Eigen::VectorXd diffs(3);
    diffs << 2.0, 3.0, 4.0;
    const Eigen::VectorXd rebuilt = invert_chain(chain, diffs);
    REQUIRE(rebuilt.size() == 4);
    CHECK(rebuilt[0] == 1.0);
    CHECK(rebuilt[1] == 3.0);
    CHECK(rebuilt[2] == 6.0);
    CHECK(rebuilt[3] == 10.0);
  }

  TEST_CASE("log10 inverse is pow10") {
    TransformChain chain;
    chain.steps.push_back(TransformStep{});  // defaults to Log10
    Eigen::VectorXd logs(3);
    logs << 0.0, 1.0, 2.0;
    const Eigen::VectorXd rebuilt = invert_chain(chain, logs);
    CHECK(rebuilt[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rebuilt[1] == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(rebuilt[2] == doctest::Approx(100.0).epsilon(1e-15));
  }

  TEST_CASE("round-trips on random positive series") {
    testsupport::Rng rng(404);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> v(40);
      for (double& x : v) x = 20.0 + 10.0 * rng.uniform();
      const DailySeries s = make_series(v);

      // log10 then first difference
      {
        TransformChain chain;
        const TransformedSeries a = apply_log10(s);
        chain.steps.push_back(a.step);
        const TransformedSeries b = apply_difference(a.series, 1);
        chain.steps.push_back(b.step);
        const Eigen::VectorXd rebuilt = invert_chain(chain, b.series.values());
        REQUIRE(rebuilt.size() == s.size());
        CHECK((rebuilt - s.values()).cwiseAbs().maxCoeff() < 1e-9);
      }
      // second difference
      {
        TransformChain chain;
        const TransformedSeries a = apply_difference(s, 2);
        chain.steps.push_back(a.step);
        const Eigen::VectorXd rebuilt = invert_chain(chain, a.series.values());
        REQUIRE(rebuilt.size() == s.size());
        CHECK((rebuilt - s.values()).cwiseAbs().maxCoeff() < 1e-9);
      }
      // percent change
      {
        TransformChain chain;
        const TransformedSeries a = apply_percent_change(s);
        chain.steps.push_back(a.step);
        const Eigen::VectorXd rebuilt = invert_chain(chain, a.series.values());
        REQUIRE(rebuilt.size() == s.size());
        CHECK((rebuilt - s.values()).cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }

  TEST_CASE("AnchorMismatch on corrupted steps") {
    TransformChain chain;
    TransformStep step;
    step.kind = TransformStep::Kind::Difference;
    step.order = 2;
    step.anchors = {1.0};  // order 2 needs two anchors
    chain.steps.push_back(step);
    Eigen::VectorXd v(2);
    v << 1.0, 1.0;
    CHECK(throws_code(errc::AnchorMismatch, [&] { invert_chain(chain, v); }));

    TransformChain pchain;
    TransformStep pstep;
    pstep.kind = TransformStep::Kind::PercentChange;
    pchain.steps.push_back(pstep);  // no anchor at all
    CHECK(throws_code(errc::AnchorMismatch, [&] { invert_chain(pchain, v); }));
  }

  TEST_CASE("longer input extends the reconstruction") {
    // training diffs plus two appended forecast diffs rebuild past the
    // original series end
    TransformChain chain;
    TransformStep step;
    step.kind = TransformStep::Kind::Difference;
    step.order = 1;
    step.anchors = {5.0};
    chain.steps.push_back(step);
    Eigen::VectorXd extended(4);
    extended << 1.0, 1.0, 2.0, 3.0;  // last two are "future" steps
    const Eigen::VectorXd rebuilt = invert_chain(chain, extended);
    REQUIRE(rebuilt.size() == 5);
    CHECK(rebuilt[4] == doctest::Approx(12.0).epsilon(1e-12));
  }
}
