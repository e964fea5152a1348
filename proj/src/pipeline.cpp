#include "chronofit/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "chronofit/csv.hpp"
#include "chronofit/error.hpp"
#include "chronofit/svg.hpp"

namespace chronofit {

namespace {

using nlohmann::json;

std::string artifact(const RunConfig& cfg, const std::string& name) {
  return cfg.output_dir + "/" + name;
}

double parse_double_field(const std::string& text, std::size_t file_row,
                          const std::string& column) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw Error(errc::ParseError, "row " + std::to_string(file_row) + ", column '" + column +
                                      "': not a number: '" + text + "'");
  }
  return v;
}

// --- clean ---------------------------------------------------------------

// Fills the missing dates of a gappy series by linear interpolation between
// the surrounding observed days (the endpoints always exist, so no
// extrapolation is needed).
DailySeries fill_gaps(const DailySeries& s) {
  const Date first = s.front_date();
  const long total = day_span(first, s.back_date()) + 1;
  std::vector<Date> dates(static_cast<size_t>(total));
  VectorXd values = VectorXd::Zero(total);
  std::vector<bool> known(static_cast<size_t>(total), false);

  for (long i = 0; i < total; ++i) dates[static_cast<size_t>(i)] = add_days(first, i);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const long pos = day_span(first, s.dates()[static_cast<size_t>(i)]);
    values[pos] = s.values()[i];
    known[static_cast<size_t>(pos)] = true;
  }
  for (long i = 0; i < total; ++i) {
    if (known[static_cast<size_t>(i)]) continue;
    long left = i - 1;
    while (!known[static_cast<size_t>(left)]) --left;
    long right = i + 1;
    while (!known[static_cast<size_t>(right)]) ++right;
    const double slope = (values[right] - values[left]) / static_cast<double>(right - left);
    values[i] = values[left] + slope * static_cast<double>(i - left);
  }
  return DailySeries(std::move(dates), std::move(values));
}

std::string series_csv(const DailySeries& s, bool exact) {
  std::string csv = "date,value\n";
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    csv += format_date(s.dates()[static_cast<size_t>(i)]) + ',';
    csv += exact ? format_double_exact(s.values()[i]) : format_double(s.values()[i]);
    csv += '\n';
  }
  return csv;
}

// --- shared loading ------------------------------------------------------

DailySeries load_cleaned(const RunConfig& cfg) {
  const std::string path = artifact(cfg, "cleaned.csv");
  if (file_exists(path)) return read_series_csv(path, "date", "value");
  return run_clean(cfg).cleaned;
}

// (training slice, held-out remainder) around the configured cutoff; with
// no cutoff everything trains.
std::pair<DailySeries, DailySeries> split_train_test(const DailySeries& s,
                                                     const RunConfig& cfg) {
  if (!cfg.train_cutoff_date) return {s, DailySeries()};
  const Date cutoff = parse_date(*cfg.train_cutoff_date);
  DailySeries train = s.up_to(cutoff);
  DailySeries test = s.after(cutoff);
  if (train.empty()) {
    throw Error(errc::DegenerateSplit, "no data at or before the training cutoff " +
                                           *cfg.train_cutoff_date);
  }
  return {std::move(train), std::move(test)};
}

// ACF and Kalman plot data for the training slice. The period stage writes
// these as part of its trace; the fit stage writes them too when the period
// stage was skipped, so the report can always show them.
void write_diagnostics(const DailySeries& train, const RunConfig& cfg) {
  const Eigen::Index max_lag = std::min<Eigen::Index>(60, train.size() - 2);
  const VectorXd r = acf(train.values(), static_cast<int>(max_lag));
  std::string acf_csv = "lag,acf\n";
  for (Eigen::Index lag = 0; lag < r.size(); ++lag) {
    acf_csv += std::to_string(lag) + ',' + format_double(r[lag]) + '\n';
  }
  write_text_file(artifact(cfg, "acf.csv"), acf_csv);

  KalmanParams kp = default_kalman_params(train.values(), cfg.period.kalman_q);
  if (cfg.period.kalman_r) kp.r = *cfg.period.kalman_r;
  const KalmanOutput ko = kalman_smooth(train.values(), kp);
  std::string kalman_csv = "day,observed,filtered,smoothed\n";
  for (Eigen::Index t = 0; t < train.size(); ++t) {
    kalman_csv += std::to_string(t) + ',' + format_double(train.values()[t]) + ',' +
                  format_double(ko.filtered_means[t]) + ',' +
                  format_double(ko.smoothed_means[t]) + '\n';
  }
  write_text_file(artifact(cfg, "kalman.csv"), kalman_csv);
}

// --- transform chain (log10 then first difference) ------------------------

struct ChainedTraining {
  TransformChain chain;
  VectorXd transformed;
};

ChainedTraining build_chain(const DailySeries& train) {
  const TransformedSeries logged = apply_log10(train);
  const TransformedSeries diffed = apply_difference(logged.series, 1);
  ChainedTraining out;
  out.chain.steps = {logged.step, diffed.step};
  out.transformed = diffed.series.values();
  return out;
}

// Original-scale points consumed by the chain before its first output.
Eigen::Index chain_offset(const TransformChain& chain) {
  Eigen::Index offset = 0;
  for (const TransformStep& step : chain.steps) {
    offset += static_cast<Eigen::Index>(step.anchors.size());
  }
  return offset;
}

// One-step fitted value on the original scale: run the inversion over the
// actual transformed history up to t with the model's prediction in place
// of the final value. This keeps one-step semantics (each prediction leans
// on actual, not predicted, history).
double invert_one_step(const TransformChain& chain, VecRef transformed, Eigen::Index t,
                       double predicted) {
  VectorXd head = transformed.head(t + 1);
  head[t] = predicted;
  const VectorXd rebuilt = invert_chain(chain, head);
  return rebuilt[rebuilt.size() - 1];
}

VectorXd forecast_to_original(const TransformChain& chain, VecRef transformed, VecRef forecast) {
  VectorXd joined(transformed.size() + forecast.size());
  joined << transformed, forecast;
  const VectorXd rebuilt = invert_chain(chain, joined);
  return rebuilt.tail(forecast.size());
}

// --- season length -------------------------------------------------------

int resolve_season_length(const RunConfig& cfg) {
  if (cfg.period_override) {
    if (*cfg.period_override < 2) {
      throw Error(errc::InvalidArgument, "season length override must be >= 2");
    }
    return *cfg.period_override;
  }
  const std::string path = artifact(cfg, "period.json");
  if (file_exists(path)) {
    try {
      const json j = json::parse(read_text_file(path));
      return j.at("period_days").get<int>();
    } catch (const json::exception& e) {
      throw Error(errc::ParseError, path + ": " + e.what());
    }
  }
  if (cfg.skip_period) {
    throw Error(errc::InvalidArgument,
                "--skip-period needs --period N or an existing period.json");
  }
  return run_period(cfg).period_days;
}

// --- model bundle helpers --------------------------------------------------

json vector_to_json(VecRef v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

const char* hwes_kind_name(HwesKind k) { return k == HwesKind::Add ? "add" : "mul"; }

HwesKind hwes_kind_from(const std::string& name) {
  if (name == "add") return HwesKind::Add;
  if (name == "mul") return HwesKind::Mul;
  throw Error(errc::ParseError, "unknown component kind '" + name + "'");
}

TrendCode trend_code_from(const std::string& name) {
  if (name == "n") return TrendCode::N;
  if (name == "c") return TrendCode::C;
  if (name == "t") return TrendCode::T;
  if (name == "ct") return TrendCode::CT;
  throw Error(errc::ParseError, "unknown trend code '" + name + "'");
}

json adf_to_json(const AdfResult& r) {
  return json{{"statistic", r.statistic},
              {"p_value", r.p_value},
              {"lags_used", r.lags_used},
              {"regression",
               r.regression_kind == RegressionKind::Constant ? "constant" : "constant_trend"}};
}

json bundle_from_fit(const RunConfig& cfg, const DailySeries& train, const FitResult& fit) {
  json steps = json::array();
  for (const TransformStep& step : fit.chain.steps) {
    json s;
    switch (step.kind) {
      case TransformStep::Kind::Log10: s["kind"] = "log10"; break;
      case TransformStep::Kind::Difference: s["kind"] = "difference"; break;
      case TransformStep::Kind::PercentChange: s["kind"] = "percent_change"; break;
    }
    if (step.kind != TransformStep::Kind::Log10) {
      s["order"] = step.order;
      s["anchors"] = step.anchors;
      json dates = json::array();
      for (Date d : step.anchor_dates) dates.push_back(format_date(d));
      s["anchor_dates"] = dates;
    }
    steps.push_back(s);
  }

  const SarimaFit& sf = fit.sarima;
  json sarima{{"label", sf.spec.label()},
              {"p", sf.spec.p},
              {"d", sf.spec.d},
              {"q", sf.spec.q},
              {"P", sf.spec.P},
              {"D", sf.spec.D},
              {"Q", sf.spec.Q},
              {"m", sf.spec.m},
              {"trend", trend_code_name(sf.spec.tr)},
              {"phi", vector_to_json(sf.phi)},
              {"theta", vector_to_json(sf.theta)},
              {"seasonal_phi", vector_to_json(sf.seasonal_phi)},
              {"seasonal_theta", vector_to_json(sf.seasonal_theta)},
              {"trend_coeffs", vector_to_json(sf.trend_coeffs)},
              {"sigma2", sf.sigma2},
              {"loglik", sf.loglik},
              {"aicc", sf.aicc},
              {"css", sf.css}};

  const HwesFit& hf = fit.hwes;
  json hwes{{"label", hf.spec.label()},
            {"trend_kind", hwes_kind_name(hf.spec.trend_kind)},
            {"seasonal_kind", hwes_kind_name(hf.spec.seasonal_kind)},
            {"alpha", hf.spec.alpha},
            {"beta", hf.spec.beta},
            {"gamma", hf.spec.gamma},
            {"m", hf.spec.m},
            {"l0", hf.l0},
            {"b0", hf.b0},
            {"s_init", vector_to_json(hf.s_init)},
            {"sigma2", hf.sigma2},
            {"loglik", hf.loglik},
            {"aicc", hf.aicc}};

  json ensemble{{"beta0", fit.ensemble.beta0},
                {"beta1", fit.ensemble.beta1},
                {"beta2", fit.ensemble.beta2},
                {"component1", fit.ensemble.component1},
                {"component2", fit.ensemble.component2},
                {"in_sample_rmse",
                 json{{"sarima", fit.sarima_rmse},
                      {"hwes", fit.hwes_rmse},
                      {"ensemble", fit.ensemble_rmse}}}};

  return json{{"schema_version", 1},
              {"m", fit.m},
              {"train", json{{"first_date", format_date(train.front_date())},
                             {"last_date", format_date(train.back_date())},
                             {"n", train.size()}}},
              {"transform", json{{"steps", steps}}},
              {"sarima", sarima},
              {"hwes", hwes},
              {"ensemble", ensemble},
              {"adf", json{{"raw", adf_to_json(fit.adf_raw)},
                           {"transformed", adf_to_json(fit.adf_transformed)},
                           {"table", adf_table::provenance()}}},
              {"config", json{{"validation_fraction", cfg.validation_fraction},
                              {"train_cutoff_date",
                               cfg.train_cutoff_date ? json(*cfg.train_cutoff_date) : json()},
                              {"seed", cfg.seed}}}};
}

json load_bundle(const RunConfig& cfg) {
  const std::string path = artifact(cfg, "model_bundle.json");
  if (!file_exists(path)) {
    throw Error(errc::MissingArtifact, path + " (run the fit stage first)");
  }
  try {
    return json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw Error(errc::ParseError, path + ": " + e.what());
  }
}

SarimaSpec sarima_spec_from(const json& b) {
  SarimaSpec spec;
  spec.p = b.at("p").get<int>();
  spec.d = b.at("d").get<int>();
  spec.q = b.at("q").get<int>();
  spec.P = b.at("P").get<int>();
  spec.D = b.at("D").get<int>();
  spec.Q = b.at("Q").get<int>();
  spec.m = b.at("m").get<int>();
  spec.tr = trend_code_from(b.at("trend").get<std::string>());
  return spec;
}

HwesSpec hwes_spec_from(const json& b) {
  HwesSpec spec;
  spec.trend_kind = hwes_kind_from(b.at("trend_kind").get<std::string>());
  spec.seasonal_kind = hwes_kind_from(b.at("seasonal_kind").get<std::string>());
  spec.alpha = b.at("alpha").get<double>();
  spec.beta = b.at("beta").get<double>();
  spec.gamma = b.at("gamma").get<double>();
  spec.m = b.at("m").get<int>();
  return spec;
}

}  // namespace

// --- read_series_csv -------------------------------------------------------

DailySeries read_series_csv(const std::string& path, const std::string& date_column,
                            const std::string& value_column) {
  const CsvTable table = read_csv(path);
  const std::size_t date_col = table.column(date_column);
  const std::size_t value_col = table.column(value_column);

  std::vector<Date> dates;
  VectorXd values(static_cast<Eigen::Index>(table.rows.size()));
  dates.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t file_row = r + 2;  // 1-based, after the header line
    if (row.size() <= std::max(date_col, value_col)) {
      throw Error(errc::ParseError,
                  "row " + std::to_string(file_row) + ": expected " +
                      std::to_string(table.header.size()) + " fields, got " +
                      std::to_string(row.size()));
    }
    try {
      dates.push_back(parse_date(row[date_col]));
    } catch (const Error&) {
      throw Error(errc::ParseError, "row " + std::to_string(file_row) + ", column '" +
                                        date_column + "': bad date '" + row[date_col] + "'");
    }
    values[static_cast<Eigen::Index>(r)] =
        parse_double_field(row[value_col], file_row, value_column);
  }
  if (dates.empty()) throw Error(errc::EmptySeries, path + " has no data rows");
  return DailySeries(std::move(dates), std::move(values));
}

// --- clean -----------------------------------------------------------------

CleanResult run_clean(const RunConfig& cfg) {
  if (cfg.input_path.empty()) {
    throw Error(errc::InvalidArgument, "no input CSV: pass --input or set input_path");
  }
  CleanResult result;
  result.raw = read_series_csv(cfg.input_path, cfg.date_column, cfg.value_column);
  result.calendar = audit_calendar(result.raw);

  DailySeries filled = result.raw;
  if (!result.calendar.missing_dates.empty()) {
    if (!cfg.allow_gaps) {
      throw Error(errc::MissingDates,
                  std::to_string(result.calendar.missing_dates.size()) +
                      " missing dates (first " +
                      format_date(result.calendar.missing_dates.front()) +
                      "); pass --allow-gaps to fill them linearly");
    }
    filled = fill_gaps(result.raw);
  }

  result.outliers = detect_outliers_zscore(filled, cfg.zscore_threshold);
  result.cleaned = repair_linear(filled, result.outliers.indices);

  write_text_file(artifact(cfg, "raw.csv"), series_csv(result.raw, false));
  write_text_file(artifact(cfg, "cleaned.csv"), series_csv(result.cleaned, true));

  std::string calendar_csv = "kind,date\n";
  for (Date d : result.calendar.missing_dates) calendar_csv += "missing," + format_date(d) + '\n';
  for (Date d : result.calendar.duplicate_dates) {
    calendar_csv += "duplicate," + format_date(d) + '\n';
  }
  write_text_file(artifact(cfg, "calendar_report.csv"), calendar_csv);

  std::string outlier_csv = "row,date,original,zscore,repaired\n";
  for (std::size_t i = 0; i < result.outliers.indices.size(); ++i) {
    const Eigen::Index idx = result.outliers.indices[i];
    outlier_csv += std::to_string(idx) + ',' +
                   format_date(filled.dates()[static_cast<size_t>(idx)]) + ',' +
                   format_double(filled.values()[idx]) + ',' +
                   format_double(result.outliers.zscores[i]) + ',' +
                   format_double(result.cleaned.values()[idx]) + '\n';
  }
  write_text_file(artifact(cfg, "outlier_report.csv"), outlier_csv);
  return result;
}

// --- period ------------------------------------------------------------------

PeriodEstimate run_period(const RunConfig& cfg) {
  const DailySeries cleaned = load_cleaned(cfg);
  const DailySeries train = split_train_test(cleaned, cfg).first;

  write_diagnostics(train, cfg);

  PeriodTrace trace;
  const PeriodEstimate est = estimate_period(train, cfg.period, &trace);

  std::string clusters_csv = "day,percent_change,cluster\n";
  for (Eigen::Index i = 0; i < trace.percent_change.size(); ++i) {
    clusters_csv += std::to_string(i) + ',' + format_double(trace.percent_change[i]) + ',' +
                    std::to_string(trace.clusters.assignments[static_cast<size_t>(i)]) + '\n';
  }
  write_text_file(artifact(cfg, "clusters.csv"), clusters_csv);

  auto spline_csv = [](const Spline& sp) {
    std::string csv = "day,value\n";
    for (double t = sp.t_min(); t <= sp.t_max() + 1e-9; t += 0.25) {
      const double clamped = std::min(t, sp.t_max());
      csv += format_double(clamped) + ',' + format_double(eval_spline(sp, clamped)) + '\n';
    }
    return csv;
  };
  write_text_file(artifact(cfg, "spline_upper.csv"), spline_csv(trace.upper_spline));
  write_text_file(artifact(cfg, "spline_lower.csv"), spline_csv(trace.lower_spline));

  std::string gaps_csv = "index,gap_days\n";
  for (Eigen::Index i = 0; i < est.day_differences.size(); ++i) {
    gaps_csv += std::to_string(i) + ',' + format_double(est.day_differences[i]) + '\n';
  }
  write_text_file(artifact(cfg, "day_differences.csv"), gaps_csv);

  json j{{"schema_version", 1},
         {"period_days", est.period_days},
         {"ci_low_days", est.ci_low_days},
         {"ci_high_days", est.ci_high_days},
         {"mean_gap_days", est.exp_fit.lambda},
         {"n_gaps", est.exp_fit.n},
         {"ks_stat", est.ks_stat},
         {"maxima_days", est.maxima_days},
         {"minima_days", est.minima_days}};
  write_text_file(artifact(cfg, "period.json"), j.dump(2) + "\n");
  return est;
}

// --- fit ---------------------------------------------------------------------

FitResult run_fit(const RunConfig& cfg) {
  const DailySeries cleaned = load_cleaned(cfg);
  const DailySeries train = split_train_test(cleaned, cfg).first;

  FitResult result;
  result.m = resolve_season_length(cfg);

  if (!file_exists(artifact(cfg, "acf.csv")) || !file_exists(artifact(cfg, "kalman.csv"))) {
    write_diagnostics(train, cfg);
  }

  // Grid search scores candidates on a held-out validation tail.
  const auto [grid_train, validation] = split_fraction(train, 1.0 - cfg.validation_fraction);
  const ChainedTraining grid_chain = build_chain(grid_train);

  // The largest candidate must be fittable, otherwise most of the grid is
  // dead weight and the model comparison is meaningless.
  {
    const SarimaGridRanges& r = cfg.sarima_ranges;
    int max_trend = 0;
    for (TrendCode tr : r.trends) max_trend = std::max(max_trend, trend_param_count(tr));
    const Eigen::Index need = r.d_max + static_cast<Eigen::Index>(r.D_max) * result.m + 10 +
                              r.p_max + r.q_max +
                              static_cast<Eigen::Index>(r.P_max + r.Q_max) * result.m;
    if (grid_train.size() - 1 < need) {
      throw Error(errc::SeriesTooShort,
                  "training slice supports only " + std::to_string(grid_train.size() - 1) +
                      " transformed points but the largest SARIMA candidate needs " +
                      std::to_string(need) + "; shrink the grid or provide more data");
    }
  }

  const int jobs = cfg.effective_jobs();
  result.sarima_grid =
      grid_search_sarima(grid_chain.transformed, validation, grid_chain.chain, cfg.sarima_ranges,
                         result.m, cfg.sarima_weights, jobs, cfg.normalize_combined);
  result.hwes_grid =
      grid_search_hwes(grid_chain.transformed, validation, grid_chain.chain, cfg.hwes_ranges,
                       result.m, cfg.hwes_weights, jobs, cfg.normalize_combined);
  write_text_file(artifact(cfg, "sarima_grid.csv"), grid_report_csv(result.sarima_grid));
  write_text_file(artifact(cfg, "hwes_grid.csv"), grid_report_csv(result.hwes_grid));

  // Refit the winners on the full training window.
  const ChainedTraining full = build_chain(train);
  result.chain = full.chain;
  result.sarima = sarima_fit(full.transformed, result.sarima_grid.best().candidate);
  result.hwes = hwes_fit(full.transformed, result.hwes_grid.best().candidate);

  // Stack on the window where both models have one-step fitted values,
  // scored on the original scale.
  const Eigen::Index offset = chain_offset(result.chain);
  std::vector<double> ys, f1s, f2s;
  for (Eigen::Index t = 0; t < full.transformed.size(); ++t) {
    const double p1 = result.sarima.fitted[t];
    const double p2 = result.hwes.fitted[t];
    if (!std::isfinite(p1) || !std::isfinite(p2)) continue;
    ys.push_back(train.values()[t + offset]);
    f1s.push_back(invert_one_step(result.chain, full.transformed, t, p1));
    f2s.push_back(invert_one_step(result.chain, full.transformed, t, p2));
  }
  const Eigen::Map<const VectorXd> y(ys.data(), static_cast<Eigen::Index>(ys.size()));
  const Eigen::Map<const VectorXd> f1(f1s.data(), static_cast<Eigen::Index>(f1s.size()));
  const Eigen::Map<const VectorXd> f2(f2s.data(), static_cast<Eigen::Index>(f2s.size()));
  result.ensemble = ols_fit(y, f1, f2);
  result.ensemble.component1 = "sarima";
  result.ensemble.component2 = "hwes";
  result.sarima_rmse = rmse(y, f1);
  result.hwes_rmse = rmse(y, f2);
  result.ensemble_rmse = rmse(y, ensemble_forecast(result.ensemble, f1, f2));

  result.adf_raw = adf_test(train.values(), RegressionKind::Constant);
  result.adf_transformed = adf_test(full.transformed, RegressionKind::Constant);

  const Decomposition dec = decompose_classical(train.values(), result.m);
  std::string dec_csv = "day,observed,trend,seasonal,residual\n";
  for (Eigen::Index t = 0; t < train.size(); ++t) {
    dec_csv += std::to_string(t) + ',' + format_double(train.values()[t]) + ',' +
               format_double(dec.trend[t]) + ',' + format_double(dec.seasonal[t]) + ',' +
               format_double(dec.residual[t]) + '\n';
  }
  write_text_file(artifact(cfg, "decomposition.csv"), dec_csv);

  write_text_file(artifact(cfg, "model_bundle.json"),
                  bundle_from_fit(cfg, train, result).dump(2) + "\n");
  return result;
}

// --- evaluate ------------------------------------------------------------------

EvaluateResult run_evaluate(const RunConfig& cfg) {
  const DailySeries cleaned = load_cleaned(cfg);
  auto [train, held_out] = split_train_test(cleaned, cfg);

  const json bundle = load_bundle(cfg);
  SarimaSpec sarima_spec;
  HwesSpec hwes_spec;
  EnsembleModel ensemble;
  try {
    sarima_spec = sarima_spec_from(bundle.at("sarima"));
    hwes_spec = hwes_spec_from(bundle.at("hwes"));
    const json& e = bundle.at("ensemble");
    ensemble.beta0 = e.at("beta0").get<double>();
    ensemble.beta1 = e.at("beta1").get<double>();
    ensemble.beta2 = e.at("beta2").get<double>();
    ensemble.component1 = e.at("component1").get<std::string>();
    ensemble.component2 = e.at("component2").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(errc::ParseError, std::string("model bundle: ") + e.what());
  }

  EvaluateResult result;
  result.test = cfg.test_path
                    ? read_series_csv(*cfg.test_path, cfg.date_column, cfg.value_column)
                    : std::move(held_out);
  if (result.test.empty()) {
    throw Error(errc::InvalidArgument,
                "no test window: set train_cutoff_date or provide a test CSV");
  }

  // The test window must be the days immediately after the training window.
  Date expected = add_days(train.back_date(), 1);
  for (const Date d : result.test.dates()) {
    if (d != expected) {
      throw Error(errc::HorizonMismatch, "test date " + format_date(d) +
                                             " does not continue the training calendar (expected " +
                                             format_date(expected) + ")");
    }
    expected = add_days(expected, 1);
  }

  const ChainedTraining full = build_chain(train);
  const SarimaFit sarima = sarima_fit(full.transformed, sarima_spec);
  const HwesFit hwes = hwes_fit(full.transformed, hwes_spec);

  const int h = static_cast<int>(result.test.size());
  result.sarima_forecast =
      forecast_to_original(full.chain, full.transformed, sarima_forecast(sarima, h));
  result.hwes_forecast =
      forecast_to_original(full.chain, full.transformed, hwes_forecast(hwes, h));
  result.ensemble_forecast =
      chronofit::ensemble_forecast(ensemble, result.sarima_forecast, result.hwes_forecast);

  const VectorXd& actual = result.test.values();
  result.sarima = {"sarima", smape(actual, result.sarima_forecast),
                   rmse(actual, result.sarima_forecast)};
  result.hwes = {"hwes", smape(actual, result.hwes_forecast), rmse(actual, result.hwes_forecast)};
  result.ensemble = {"ensemble", smape(actual, result.ensemble_forecast),
                     rmse(actual, result.ensemble_forecast)};

  std::string metrics_csv = "model,smape,rmse\n";
  for (const ModelMetrics* m : {&result.sarima, &result.hwes, &result.ensemble}) {
    metrics_csv += m->model + ',' + format_double(m->smape) + ',' + format_double(m->rmse) + '\n';
  }
  write_text_file(artifact(cfg, "metrics.csv"), metrics_csv);

  std::string forecast_csv = "date,actual,sarima,hwes,ensemble\n";
  for (Eigen::Index i = 0; i < result.test.size(); ++i) {
    forecast_csv += format_date(result.test.dates()[static_cast<size_t>(i)]) + ',' +
                    format_double(actual[i]) + ',' + format_double(result.sarima_forecast[i]) +
                    ',' + format_double(result.hwes_forecast[i]) + ',' +
                    format_double(result.ensemble_forecast[i]) + '\n';
  }
  write_text_file(artifact(cfg, "forecast.csv"), forecast_csv);
  return result;
}

// --- report ----------------------------------------------------------------------

namespace {

CsvTable need_csv(const RunConfig& cfg, const std::string& name) {
  const std::string path = artifact(cfg, name);
  if (!file_exists(path)) {
    throw Error(errc::MissingArtifact, path + " (run the earlier stages first)");
  }
  return read_csv(path);
}

std::vector<double> numeric_column(const CsvTable& table, const std::string& name) {
  const std::size_t col = table.column(name);
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    out.push_back(std::strtod(row[col].c_str(), nullptr));
  }
  return out;
}

// x values as day offsets from `origin`, taken from an ISO date column.
std::vector<double> day_offsets(const CsvTable& table, const std::string& name, Date origin) {
  const std::size_t col = table.column(name);
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    out.push_back(static_cast<double>(day_span(origin, parse_date(row[col]))));
  }
  return out;
}

}  // namespace

void run_report(const RunConfig& cfg) {
  const CsvTable raw = need_csv(cfg, "raw.csv");
  const CsvTable cleaned = need_csv(cfg, "cleaned.csv");
  const CsvTable calendar = need_csv(cfg, "calendar_report.csv");
  const CsvTable outliers = need_csv(cfg, "outlier_report.csv");
  const CsvTable acf_data = need_csv(cfg, "acf.csv");
  const CsvTable kalman = need_csv(cfg, "kalman.csv");
  const CsvTable decomposition = need_csv(cfg, "decomposition.csv");
  const CsvTable metrics = need_csv(cfg, "metrics.csv");
  const CsvTable forecast = need_csv(cfg, "forecast.csv");
  const json bundle = load_bundle(cfg);
  for (const char* name : {"sarima_grid.csv", "hwes_grid.csv"}) {
    if (!file_exists(artifact(cfg, name))) {
      throw Error(errc::MissingArtifact, artifact(cfg, name) + " (run the fit stage first)");
    }
  }

  const Date origin = parse_date(cleaned.rows.front()[cleaned.column("date")]);

  // Raw vs cleaned overlay.
  {
    SvgSeries raw_s{"raw", day_offsets(raw, "date", origin), numeric_column(raw, "value"), false};
    SvgSeries clean_s{"cleaned", day_offsets(cleaned, "date", origin),
                      numeric_column(cleaned, "value"), false};
    write_text_file(artifact(cfg, "raw_series.svg"),
                    render_chart("Input series", "day", "value", {raw_s, clean_s}));
  }
  write_text_file(artifact(cfg, "histogram.svg"),
                  render_histogram("Cleaned value distribution",
                                   numeric_column(cleaned, "value"), 30));
  write_text_file(
      artifact(cfg, "acf.svg"),
      render_chart("Autocorrelation", "lag", "acf",
                   {SvgSeries{"acf", numeric_column(acf_data, "lag"),
                              numeric_column(acf_data, "acf"), false}}));
  write_text_file(
      artifact(cfg, "kalman.svg"),
      render_chart("State estimate", "day", "value",
                   {SvgSeries{"observed", numeric_column(kalman, "day"),
                              numeric_column(kalman, "observed"), true},
                    SvgSeries{"filtered", numeric_column(kalman, "day"),
                              numeric_column(kalman, "filtered"), false},
                    SvgSeries{"smoothed", numeric_column(kalman, "day"),
                              numeric_column(kalman, "smoothed"), false}}));
  {
    std::vector<SvgSeries> panels;
    for (const char* name : {"observed", "trend", "seasonal", "residual"}) {
      panels.push_back(SvgSeries{name, numeric_column(decomposition, "day"),
                                 numeric_column(decomposition, name), false});
    }
    write_text_file(artifact(cfg, "decomposition.svg"),
                    render_chart("Classical decomposition", "day", "value", panels));
  }
  {
    std::vector<SvgSeries> overlay;
    overlay.push_back(SvgSeries{"actual", day_offsets(forecast, "date", origin),
                                numeric_column(forecast, "actual"), false});
    for (const char* name : {"sarima", "hwes", "ensemble"}) {
      overlay.push_back(SvgSeries{name, day_offsets(forecast, "date", origin),
                                  numeric_column(forecast, name), false});
    }
    write_text_file(artifact(cfg, "forecast.svg"),
                    render_chart("Test-window forecasts", "day", "value", overlay));
  }

  const bool with_period = !cfg.skip_period && file_exists(artifact(cfg, "period.json"));
  json period_info;
  if (with_period) {
    const CsvTable clusters = need_csv(cfg, "clusters.csv");
    const CsvTable upper = need_csv(cfg, "spline_upper.csv");
    const CsvTable lower = need_csv(cfg, "spline_lower.csv");
    try {
      period_info = json::parse(read_text_file(artifact(cfg, "period.json")));
    } catch (const json::exception& e) {
      throw Error(errc::ParseError, std::string("period.json: ") + e.what());
    }

    const std::vector<double> days = numeric_column(clusters, "day");
    const std::vector<double> pc = numeric_column(clusters, "percent_change");
    const std::vector<double> cluster_ids = numeric_column(clusters, "cluster");
    double max_id = 0.0;
    for (double c : cluster_ids) max_id = std::max(max_id, c);
    std::vector<SvgSeries> cluster_series;
    for (int c = 0; c <= static_cast<int>(max_id); ++c) {
      SvgSeries s;
      s.label = "cluster " + std::to_string(c);
      s.points_only = true;
      for (std::size_t i = 0; i < cluster_ids.size(); ++i) {
        if (static_cast<int>(cluster_ids[i]) != c) continue;
        s.xs.push_back(days[i]);
        s.ys.push_back(pc[i]);
      }
      cluster_series.push_back(std::move(s));
    }
    cluster_series.push_back(SvgSeries{"upper spline", numeric_column(upper, "day"),
                                       numeric_column(upper, "value"), false});
    cluster_series.push_back(SvgSeries{"lower spline", numeric_column(lower, "day"),
                                       numeric_column(lower, "value"), false});
    write_text_file(artifact(cfg, "clusters.svg"),
                    render_chart("Percent-change clusters", "day", "percent change",
                                 cluster_series));
  }

  std::string md = "# Forecast report\n\n";
  md += "## Data\n\n";
  md += "- Input rows: " + std::to_string(raw.rows.size()) + "\n";
  md += "- Cleaned rows: " + std::to_string(cleaned.rows.size()) + "\n";
  md += "- Calendar fixes: " + std::to_string(calendar.rows.size()) + "\n";
  md += "- Repaired outliers: " + std::to_string(outliers.rows.size()) + "\n\n";
  md += "![Input series](raw_series.svg)\n\n";
  md += "![Histogram](histogram.svg)\n\n";

  md += "## Stationarity\n\n";
  md += "| series | ADF statistic | p-value | lags |\n|---|---|---|---|\n";
  for (const char* key : {"raw", "transformed"}) {
    const json& a = bundle.at("adf").at(key);
    md += std::string("| ") + key + " | " + format_double(a.at("statistic").get<double>()) +
          " | " + format_double(a.at("p_value").get<double>()) + " | " +
          std::to_string(a.at("lags_used").get<int>()) + " |\n";
  }
  md += "\nCritical values: " + bundle.at("adf").at("table").get<std::string>() + "\n\n";
  md += "![Autocorrelation](acf.svg)\n\n";
  md += "![State estimate](kalman.svg)\n\n";

  md += "## Season length\n\n";
  if (with_period) {
    md += "- Estimated period: " + std::to_string(period_info.at("period_days").get<int>()) +
          " days (95% CI " + format_double(period_info.at("ci_low_days").get<double>()) + " to " +
          format_double(period_info.at("ci_high_days").get<double>()) + " days, " +
          std::to_string(period_info.at("n_gaps").get<int>()) + " extrema gaps)\n";
    md += "- KS distance of gaps vs fitted exponential: " +
          format_double(period_info.at("ks_stat").get<double>()) + "\n\n";
    md += "![Clusters](clusters.svg)\n\n";
  } else {
    md += "Period estimation was skipped; the season length m = " +
          std::to_string(bundle.at("m").get<int>()) + " came from an override.\n\n";
  }

  md += "## Models\n\n";
  md += "- Component 1 (SARIMA): " + bundle.at("sarima").at("label").get<std::string>() +
        ", AICc " + format_double(bundle.at("sarima").at("aicc").get<double>()) + "\n";
  md += "- Component 2 (HWES): " + bundle.at("hwes").at("label").get<std::string>() + ", AICc " +
        format_double(bundle.at("hwes").at("aicc").get<double>()) + "\n";
  const json& e = bundle.at("ensemble");
  md += "- Stacking coefficients: beta0 = " + format_double(e.at("beta0").get<double>()) +
        ", beta1 = " + format_double(e.at("beta1").get<double>()) +
        ", beta2 = " + format_double(e.at("beta2").get<double>()) + "\n";
  const json& rmse_info = e.at("in_sample_rmse");
  md += "- In-sample RMSE: sarima " + format_double(rmse_info.at("sarima").get<double>()) +
        ", hwes " + format_double(rmse_info.at("hwes").get<double>()) + ", ensemble " +
        format_double(rmse_info.at("ensemble").get<double>()) + "\n\n";
  md += "Full candidate grids: [sarima_grid.csv](sarima_grid.csv), "
        "[hwes_grid.csv](hwes_grid.csv)\n\n";
  md += "![Decomposition](decomposition.svg)\n\n";

  md += "## Test metrics\n\n";
  md += "| model | SMAPE (%) | RMSE |\n|---|---|---|\n";
  const std::size_t model_col = metrics.column("model");
  const std::size_t smape_col = metrics.column("smape");
  const std::size_t rmse_col = metrics.column("rmse");
  for (const auto& row : metrics.rows) {
    md += "| " + row[model_col] + " | " + row[smape_col] + " | " + row[rmse_col] + " |\n";
  }
  md += "\n![Forecasts](forecast.svg)\n";

  write_text_file(artifact(cfg, "report.md"), md);
}

}  // namespace chronofit
