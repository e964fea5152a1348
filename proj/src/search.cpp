#include "chronofit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <thread>
#include <tuple>

#include "chronofit/error.hpp"
#include "chronofit/stats.hpp"

namespace chronofit {

void validate_weights(const Weights& w) {
  const bool in01 = w.c1 >= 0.0 && w.c1 <= 1.0 && w.c2 >= 0.0 && w.c2 <= 1.0;
  if (!in01 || std::abs(w.c1 + w.c2 - 1.0) > 1e-12) {
    throw Error(errc::InvalidWeights,
                "need c1, c2 in [0,1] with c1 + c2 = 1; got " + std::to_string(w.c1) + ", " +
                    std::to_string(w.c2));
  }
}

namespace {

std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n') c = ';';
  }
  return text;
}

auto sarima_key(const SarimaSpec& s) {
  return std::make_tuple(s.p, s.d, s.q, s.P, s.D, s.Q, s.m, static_cast<int>(s.tr));
}

auto hwes_key(const HwesSpec& s) {
  return std::make_tuple(static_cast<int>(s.trend_kind), static_cast<int>(s.seasonal_kind),
                         s.alpha, s.beta, s.gamma, s.m);
}

// Evaluates every candidate (possibly across `jobs` threads; slot-per-index
// storage keeps the result independent of scheduling), then normalizes if
// asked, sorts by tuple, and selects the minimum finite combined value.
template <typename Spec, typename KeyFn>
GridReport<Spec> run_grid(std::vector<Spec> candidates,
                          const std::function<GridOutcome<Spec>(const Spec&)>& evaluate,
                          const Weights& weights, int jobs, bool normalize, KeyFn key) {
  validate_weights(weights);
  if (candidates.empty()) {
    throw Error(errc::InvalidArgument, "empty candidate grid");
  }

  GridReport<Spec> report;
  report.weights = weights;
  report.normalized = normalize;
  report.outcomes.resize(candidates.size());

  const auto worker_count =
      std::max(1, std::min<int>(jobs, static_cast<int>(candidates.size())));
  if (worker_count == 1) {
    for (size_t i = 0; i < candidates.size(); ++i) {
      report.outcomes[i] = evaluate(candidates[i]);
    }
  } else {
    std::atomic<size_t> next{0};
    auto drain = [&]() {
      for (size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
        report.outcomes[i] = evaluate(candidates[i]);
      }
    };
    std::vector<std::thread> workers;
    for (int t = 0; t < worker_count; ++t) workers.emplace_back(drain);
    for (auto& t : workers) t.join();
  }

  for (auto& outcome : report.outcomes) {
    if (outcome.status == CandidateStatus::Fitted &&
        (!std::isfinite(outcome.v1) || !std::isfinite(outcome.v2))) {
      outcome.status = CandidateStatus::Failed;
      outcome.failure_reason = "non-finite objective";
    }
  }

  if (normalize) {
    double lo1 = std::numeric_limits<double>::infinity(), hi1 = -lo1;
    double lo2 = lo1, hi2 = -lo1;
    for (const auto& o : report.outcomes) {
      if (o.status != CandidateStatus::Fitted) continue;
      lo1 = std::min(lo1, o.v1);
      hi1 = std::max(hi1, o.v1);
      lo2 = std::min(lo2, o.v2);
      hi2 = std::max(hi2, o.v2);
    }
    for (auto& o : report.outcomes) {
      if (o.status != CandidateStatus::Fitted) continue;
      const double n1 = hi1 > lo1 ? (o.v1 - lo1) / (hi1 - lo1) : 0.0;
      const double n2 = hi2 > lo2 ? (o.v2 - lo2) / (hi2 - lo2) : 0.0;
      o.combined = weights.c1 * n1 + weights.c2 * n2;
    }
  } else {
    for (auto& o : report.outcomes) {
      if (o.status != CandidateStatus::Fitted) continue;
      o.combined = weights.c1 * o.v1 + weights.c2 * o.v2;
    }
  }

  std::stable_sort(report.outcomes.begin(), report.outcomes.end(),
                   [&](const GridOutcome<Spec>& a, const GridOutcome<Spec>& b) {
                     return key(a.candidate) < key(b.candidate);
                   });

  bool found = false;
  for (size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    if (o.status != CandidateStatus::Fitted || !std::isfinite(o.combined)) continue;
    if (!found || o.combined < report.outcomes[report.best_index].combined) {
      report.best_index = i;
      found = true;
    }
  }
  if (!found) {
    throw Error(errc::AllCandidatesFailed, "no candidate produced a finite combined objective");
  }
  return report;
}

// Forecast in the transformed space, then push the training output plus the
// forecast back through the chain; the trailing h values are the
// original-scale forecast.
VectorXd to_original_scale(const TransformChain& chain, VecRef train, VecRef forecast) {
  VectorXd joined(train.size() + forecast.size());
  joined << train, forecast;
  const VectorXd original = invert_chain(chain, joined);
  return original.tail(forecast.size());
}

}  // namespace

GridReport<SarimaSpec> grid_search_sarima(VecRef train, const DailySeries& validation,
                                          const TransformChain& chain,
                                          const SarimaGridRanges& ranges, int m,
                                          const Weights& weights, int jobs, bool normalize) {
  if (validation.empty()) throw Error(errc::InvalidArgument, "empty validation slice");
  std::vector<SarimaSpec> candidates;
  for (int p = 0; p <= ranges.p_max; ++p)
    for (int d = 0; d <= ranges.d_max; ++d)
      for (int q = 0; q <= ranges.q_max; ++q)
        for (int P = 0; P <= ranges.P_max; ++P)
          for (int D = 0; D <= ranges.D_max; ++D)
            for (int Q = 0; Q <= ranges.Q_max; ++Q)
              for (TrendCode tr : ranges.trends) {
                SarimaSpec spec;
                spec.p = p; spec.d = d; spec.q = q;
                spec.P = P; spec.D = D; spec.Q = Q;
                spec.m = m; spec.tr = tr;
                if (m < 2 && (P > 0 || D > 0 || Q > 0)) continue;
                candidates.push_back(spec);
              }

  const int h = static_cast<int>(validation.size());
  const VectorXd train_copy = train;
  std::function<GridOutcome<SarimaSpec>(const SarimaSpec&)> evaluate =
      [&chain, &validation, train_copy, h](const SarimaSpec& spec) {
        GridOutcome<SarimaSpec> out;
        out.candidate = spec;
        try {
          const SarimaFit fit = sarima_fit(train_copy, spec);
          const VectorXd fc = sarima_forecast(fit, h);
          const VectorXd fc_original = to_original_scale(chain, train_copy, fc);
          out.v1 = fit.aicc;
          out.v2 = smape(validation.values(), fc_original);
          out.status = CandidateStatus::Fitted;
        } catch (const Error& e) {
          out.status = CandidateStatus::Failed;
          out.failure_reason = e.what();
        }
        return out;
      };
  return run_grid<SarimaSpec>(std::move(candidates), evaluate, weights, jobs, normalize,
                              [](const SarimaSpec& s) { return sarima_key(s); });
}

GridReport<HwesSpec> grid_search_hwes(VecRef train, const DailySeries& validation,
                                      const TransformChain& chain, const HwesGridRanges& ranges,
                                      int m, const Weights& weights, int jobs, bool normalize) {
  if (validation.empty()) throw Error(errc::InvalidArgument, "empty validation slice");
  std::vector<HwesSpec> candidates;
  for (HwesKind tk : ranges.trend_kinds)
    for (HwesKind sk : ranges.seasonal_kinds)
      for (double a : ranges.alphas)
        for (double b : ranges.betas)
          for (double g : ranges.gammas) {
            HwesSpec spec;
            spec.trend_kind = tk;
            spec.seasonal_kind = sk;
            spec.alpha = a; spec.beta = b; spec.gamma = g;
            spec.m = m;
            candidates.push_back(spec);
          }

  const int h = static_cast<int>(validation.size());
  const VectorXd train_copy = train;
  std::function<GridOutcome<HwesSpec>(const HwesSpec&)> evaluate =
      [&chain, &validation, train_copy, h](const HwesSpec& spec) {
        GridOutcome<HwesSpec> out;
        out.candidate = spec;
        try {
          const HwesFit fit = hwes_fit(train_copy, spec);
          const VectorXd fc = hwes_forecast(fit, h);
          const VectorXd fc_original = to_original_scale(chain, train_copy, fc);
          out.v1 = fit.aicc;
          out.v2 = smape(validation.values(), fc_original);
          out.status = CandidateStatus::Fitted;
        } catch (const Error& e) {
          out.status = CandidateStatus::Failed;
          out.failure_reason = e.what();
        }
        return out;
      };
  return run_grid<HwesSpec>(std::move(candidates), evaluate, weights, jobs, normalize,
                            [](const HwesSpec& s) { return hwes_key(s); });
}

namespace {
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

const char* status_name(CandidateStatus s) {
  return s == CandidateStatus::Fitted ? "fitted" : "failed";
}
}  // namespace

std::string grid_report_csv(const GridReport<SarimaSpec>& report) {
  std::string csv = "p,d,q,P,D,Q,m,tr,v1,v2,combined,status,reason\n";
  for (const auto& o : report.outcomes) {
    const SarimaSpec& s = o.candidate;
    csv += std::to_string(s.p) + ',' + std::to_string(s.d) + ',' + std::to_string(s.q) + ',' +
           std::to_string(s.P) + ',' + std::to_string(s.D) + ',' + std::to_string(s.Q) + ',' +
           std::to_string(s.m) + ',' + trend_code_name(s.tr) + ',';
    if (o.status == CandidateStatus::Fitted) {
      csv += fmt(o.v1) + ',' + fmt(o.v2) + ',' + fmt(o.combined);
    } else {
      csv += ",,";
    }
    csv += ',';
    csv += status_name(o.status);
    csv += ',' + sanitize(o.failure_reason) + '\n';
  }
  return csv;
}

std::string grid_report_csv(const GridReport<HwesSpec>& report) {
  std::string csv = "trend,seasonal,alpha,beta,gamma,m,v1,v2,combined,status,reason\n";
  for (const auto& o : report.outcomes) {
    const HwesSpec& s = o.candidate;
    csv += std::string(s.trend_kind == HwesKind::Add ? "add" : "mul") + ',' +
           (s.seasonal_kind == HwesKind::Add ? "add" : "mul") + ',' + fmt(s.alpha) + ',' +
           fmt(s.beta) + ',' + fmt(s.gamma) + ',' + std::to_string(s.m) + ',';
    if (o.status == CandidateStatus::Fitted) {
      csv += fmt(o.v1) + ',' + fmt(o.v2) + ',' + fmt(o.combined);
    } else {
      csv += ",,";
    }
    csv += ',';
    csv += status_name(o.status);
    csv += ',' + sanitize(o.failure_reason) + '\n';
  }
  return csv;
}

}  // namespace chronofit
