#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "chronofit/config.hpp"
#include "chronofit/error.hpp"
#include "chronofit/pipeline.hpp"

namespace {

using chronofit::RunConfig;

// One flag per config key; a flag given on the command line overrides the
// value loaded from --config.
struct CliValues {
  std::optional<std::string> config;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::optional<std::string> date_column;
  std::optional<std::string> value_column;
  std::optional<std::string> cutoff;
  std::optional<std::string> test;
  std::optional<double> validation_fraction;
  std::optional<double> zscore_threshold;
  std::optional<int> period;
  std::optional<int> jobs;
  std::optional<unsigned> seed;
  CLI::Option* skip_period = nullptr;
  CLI::Option* allow_gaps = nullptr;
  CLI::Option* normalize = nullptr;
};

void add_common(CLI::App* sub, CliValues& v) {
  sub->add_option("--config", v.config, "JSON config file (flags override its keys)");
  sub->add_option("--input", v.input, "input CSV with date and value columns");
  sub->add_option("--output", v.output, "artifact directory (default: out)");
  sub->add_option("--date-column", v.date_column, "input date column name (default: date)");
  sub->add_option("--value-column", v.value_column, "input value column name (default: value)");
  sub->add_option("--cutoff", v.cutoff, "last training date (ISO); later rows are the test window");
  sub->add_option("--test", v.test, "separate test CSV for evaluate");
  sub->add_option("--validation-fraction", v.validation_fraction,
                  "training tail held out for grid search (default: 0.05)");
  sub->add_option("--zscore-threshold", v.zscore_threshold,
                  "outlier flagging threshold (default: 3)");
  sub->add_option("--period,-p", v.period, "season length override in days");
  sub->add_option("--jobs", v.jobs, "grid-search worker threads (default: all cores)");
  sub->add_option("--seed", v.seed, "seed recorded in artifacts (default: 42)");
  v.skip_period = sub->add_flag("--skip-period", "do not run period estimation");
  v.allow_gaps = sub->add_flag("--allow-gaps", "fill missing dates linearly instead of failing");
  v.normalize = sub->add_flag("--normalize", "min-max normalize the two selection objectives");
}

RunConfig make_config(const CliValues& v) {
  RunConfig cfg = v.config ? chronofit::load_config(*v.config) : RunConfig{};
  if (v.input) cfg.input_path = *v.input;
  if (v.output) cfg.output_dir = *v.output;
  if (v.date_column) cfg.date_column = *v.date_column;
  if (v.value_column) cfg.value_column = *v.value_column;
  if (v.cutoff) cfg.train_cutoff_date = *v.cutoff;
  if (v.test) cfg.test_path = *v.test;
  if (v.validation_fraction) cfg.validation_fraction = *v.validation_fraction;
  if (v.zscore_threshold) cfg.zscore_threshold = *v.zscore_threshold;
  if (v.period) cfg.period_override = *v.period;
  if (v.jobs) cfg.jobs = *v.jobs;
  if (v.seed) cfg.seed = *v.seed;
  if (v.skip_period->count() > 0) cfg.skip_period = true;
  if (v.allow_gaps->count() > 0) cfg.allow_gaps = true;
  if (v.normalize->count() > 0) cfg.normalize_combined = true;
  return cfg;
}

std::string round3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chronofit: batch forecasting for univariate daily series"};
  app.require_subcommand(1);

  CliValues values;
  CLI::App* clean = app.add_subcommand("clean", "parse, audit and repair the input CSV");
  CLI::App* period = app.add_subcommand("period", "estimate the dominant season length");
  CLI::App* fit = app.add_subcommand("fit", "grid-search and fit both models plus the ensemble");
  CLI::App* evaluate = app.add_subcommand("evaluate", "score the fitted models on the test window");
  CLI::App* report = app.add_subcommand("report", "render report.md and the SVG plots");
  for (CLI::App* sub : {clean, period, fit, evaluate, report}) add_common(sub, values);

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = make_config(values);
    if (clean->parsed()) {
      const chronofit::CleanResult r = chronofit::run_clean(cfg);
      std::cout << "cleaned " << r.cleaned.size() << " rows ("
                << r.calendar.missing_dates.size() << " gaps filled, "
                << r.outliers.indices.size() << " outliers repaired) -> " << cfg.output_dir
                << "\n";
    } else if (period->parsed()) {
      const chronofit::PeriodEstimate est = chronofit::run_period(cfg);
      std::cout << "period estimate: " << est.period_days << " days (95% CI "
                << round3(est.ci_low_days) << " to " << round3(est.ci_high_days) << ", "
                << est.exp_fit.n << " gaps) -> " << cfg.output_dir << "\n";
    } else if (fit->parsed()) {
      const chronofit::FitResult r = chronofit::run_fit(cfg);
      std::cout << "season length m = " << r.m << "\n"
                << "sarima winner: " << r.sarima.spec.label() << " (AICc "
                << round3(r.sarima.aicc) << ")\n"
                << "hwes winner:   " << r.hwes.spec.label() << " (AICc " << round3(r.hwes.aicc)
                << ")\n"
                << "ensemble:      beta = (" << round3(r.ensemble.beta0) << ", "
                << round3(r.ensemble.beta1) << ", " << round3(r.ensemble.beta2) << ")\n"
                << "in-sample RMSE: sarima " << round3(r.sarima_rmse) << ", hwes "
                << round3(r.hwes_rmse) << ", ensemble " << round3(r.ensemble_rmse) << "\n";
    } else if (evaluate->parsed()) {
      const chronofit::EvaluateResult r = chronofit::run_evaluate(cfg);
      std::cout << "model,smape,rmse\n";
      for (const chronofit::ModelMetrics* m : {&r.sarima, &r.hwes, &r.ensemble}) {
        std::cout << m->model << ',' << round3(m->smape) << ',' << round3(m->rmse) << "\n";
      }
    } else if (report->parsed()) {
      chronofit::run_report(cfg);
      std::cout << "wrote " << cfg.output_dir << "/report.md\n";
    }
  } catch (const chronofit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return chronofit::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
