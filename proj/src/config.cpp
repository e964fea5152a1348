#include "chronofit/config.hpp"

#include <json.hpp>
#include <thread>

#include "chronofit/csv.hpp"
#include "chronofit/error.hpp"

namespace chronofit {

namespace {
using nlohmann::json;

template <typename T>
void maybe(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

std::vector<double> grid_from(const json& j) {
  return j.get<std::vector<double>>();
}

void parse_weights(const json& j, const char* key, Weights& w) {
  if (!j.contains(key)) return;
  const auto& arr = j.at(key);
  if (!arr.is_array() || arr.size() != 2) {
    throw Error(errc::ParseError, std::string(key) + " must be a [c1, c2] pair");
  }
  w.c1 = arr[0].get<double>();
  w.c2 = arr[1].get<double>();
}

std::vector<HwesKind> parse_kinds(const json& arr, const char* key) {
  std::vector<HwesKind> kinds;
  for (const auto& item : arr) {
    const std::string name = item.get<std::string>();
    if (name == "add") {
      kinds.push_back(HwesKind::Add);
    } else if (name == "mul") {
      kinds.push_back(HwesKind::Mul);
    } else {
      throw Error(errc::ParseError, std::string(key) + ": unknown kind '" + name + "'");
    }
  }
  if (kinds.empty()) throw Error(errc::ParseError, std::string(key) + " is empty");
  return kinds;
}
}  // namespace

int RunConfig::effective_jobs() const {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(errc::ParseError, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(errc::ParseError, "config must be a JSON object");

  RunConfig cfg;
  try {
    maybe(j, "input_path", cfg.input_path);
    maybe(j, "date_column", cfg.date_column);
    maybe(j, "value_column", cfg.value_column);
    maybe(j, "output_dir", cfg.output_dir);
    if (j.contains("train_cutoff_date")) cfg.train_cutoff_date = j.at("train_cutoff_date").get<std::string>();
    if (j.contains("test_path")) cfg.test_path = j.at("test_path").get<std::string>();
    maybe(j, "validation_fraction", cfg.validation_fraction);
    maybe(j, "zscore_threshold", cfg.zscore_threshold);
    maybe(j, "allow_gaps", cfg.allow_gaps);
    maybe(j, "jobs", cfg.jobs);
    maybe(j, "seed", cfg.seed);
    maybe(j, "normalize_combined", cfg.normalize_combined);

    if (j.contains("period")) {
      const auto& p = j.at("period");
      maybe(p, "kalman_q", cfg.period.kalman_q);
      if (p.contains("kalman_r")) cfg.period.kalman_r = p.at("kalman_r").get<double>();
      maybe(p, "use_filtered", cfg.period.use_filtered);
      maybe(p, "lsq_knot_step", cfg.period.lsq_knot_step);
      maybe(p, "grid_step", cfg.period.grid_step);
      if (p.contains("spline_mode")) {
        const std::string mode = p.at("spline_mode").get<std::string>();
        if (mode == "interpolate") {
          cfg.period.spline_mode = SplineMode::Interpolate;
        } else if (mode == "approximate") {
          cfg.period.spline_mode = SplineMode::Approximate;
        } else {
          throw Error(errc::ParseError, "spline_mode must be interpolate|approximate");
        }
      }
    }
    if (j.contains("period_override")) cfg.period_override = j.at("period_override").get<int>();
    maybe(j, "skip_period", cfg.skip_period);

    if (j.contains("sarima")) {
      const auto& s = j.at("sarima");
      maybe(s, "p_max", cfg.sarima_ranges.p_max);
      maybe(s, "d_max", cfg.sarima_ranges.d_max);
      maybe(s, "q_max", cfg.sarima_ranges.q_max);
      maybe(s, "P_max", cfg.sarima_ranges.P_max);
      maybe(s, "D_max", cfg.sarima_ranges.D_max);
      maybe(s, "Q_max", cfg.sarima_ranges.Q_max);
      if (s.contains("trends")) {
        std::vector<TrendCode> trends;
        for (const auto& item : s.at("trends")) {
          const std::string name = item.get<std::string>();
          if (name == "n") trends.push_back(TrendCode::N);
          else if (name == "c") trends.push_back(TrendCode::C);
          else if (name == "t") trends.push_back(TrendCode::T);
          else if (name == "ct") trends.push_back(TrendCode::CT);
          else throw Error(errc::ParseError, "unknown trend code '" + name + "'");
        }
        if (trends.empty()) throw Error(errc::ParseError, "sarima.trends is empty");
        cfg.sarima_ranges.trends = std::move(trends);
      }
      parse_weights(s, "weights", cfg.sarima_weights);
    }
    if (j.contains("hwes")) {
      const auto& h = j.at("hwes");
      if (h.contains("alphas")) cfg.hwes_ranges.alphas = grid_from(h.at("alphas"));
      if (h.contains("betas")) cfg.hwes_ranges.betas = grid_from(h.at("betas"));
      if (h.contains("gammas")) cfg.hwes_ranges.gammas = grid_from(h.at("gammas"));
      if (h.contains("trend_kinds")) cfg.hwes_ranges.trend_kinds = parse_kinds(h.at("trend_kinds"), "trend_kinds");
      if (h.contains("seasonal_kinds")) cfg.hwes_ranges.seasonal_kinds = parse_kinds(h.at("seasonal_kinds"), "seasonal_kinds");
      parse_weights(h, "weights", cfg.hwes_weights);
    }
  } catch (const json::exception& e) {
    throw Error(errc::ParseError, std::string("config: ") + e.what());
  }

  if (!(cfg.validation_fraction > 0.0 && cfg.validation_fraction < 1.0)) {
    throw Error(errc::ParseError, "validation_fraction must lie in (0,1)");
  }
  validate_weights(cfg.sarima_weights);
  validate_weights(cfg.hwes_weights);
  return cfg;
}

RunConfig load_config(const std::string& path) { return parse_config(read_text_file(path)); }

}  // namespace chronofit
