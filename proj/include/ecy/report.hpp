#pragma once

#include "ecy/anomaly.hpp"
#include "ecy/euler.hpp"
#include "ecy/fibers.hpp"
#include "ecy/localmodel.hpp"
#include "ecy/spectrum.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ecy::report {

using lattice::Int;

constexpr int kConfigVersion = 1;

enum class OutputFormat { Json, Text };

struct RunConfig {
  int version = kConfigVersion;
  // {"builtin": "P2"}, {"builtin": "Fn", "n": 1} or {"custom": {"form", "canonical", "h11"}}
  nlohmann::json base = {{"builtin", "P2"}};
  std::optional<std::vector<Int>> sigma1;  // absent: smooth Weierstrass model
  std::string kodaira = "I1";
  std::string monodromy = "none";
  fibers::Strictness strictness = fibers::Strictness::Strict;
  OutputFormat output = OutputFormat::Json;

  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const nlohmann::json& doc);
// .toml by extension, JSON otherwise
RunConfig load_config(const std::string& path);
nlohmann::json toml_to_json(const std::string& text);
nlohmann::json config_to_json(const RunConfig& config);
lattice::BaseSurface resolve_base(const nlohmann::json& base);

struct Report {
  RunConfig config;
  bool smooth = false;
  std::string row;    // empty in smooth mode
  std::string group;  // label, empty in smooth mode
  fibers::PointCounts counts;
  // pipeline results; absent when a warn-mode violation stopped the pipeline
  std::optional<euler::EulerBreakdown> euler;
  std::optional<Int> r_geometric;
  std::optional<Int> r_representation;
  std::optional<Int> h_charged;
  std::optional<spectrum::MatterSpectrum> spectrum;
  std::optional<anomaly::AnomalyReport> anomaly;
  std::optional<spectrum::PredictionReport> prediction;
  std::vector<std::string> consistency_failures;
  std::vector<std::string> warnings;

  bool valid() const { return warnings.empty(); }
  bool agree() const;
  bool pass() const;
  bool operator==(const Report&) const = default;
};

// strict mode throws ValidityError; warn mode records violations in warnings
Report run_report(const RunConfig& config);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& doc);
std::string report_to_text(const Report& r);

// 0 when valid and agreeing, 3 for a recorded violation, 4 for a pipeline disagreement
int report_exit_code(const Report& r);

struct SweepItem {
  std::vector<Int> sigma1;
  std::optional<Report> report;
  std::string skip_reason;  // set when report is absent
};

// every Sigma1 with entries in [0, bound] other than 0
std::vector<SweepItem> sweep(const RunConfig& config, int bound);
nlohmann::json sweep_to_json(const std::vector<SweepItem>& items);
std::string sweep_to_text(const std::vector<SweepItem>& items);

nlohmann::json tables(int max_n, int max_k, int max_m);

// {"version": 1, "truncation": N, "a1": [[deg_s, deg_t, coeff], ...], ..., "a6": [...]}; absent coefficients are 0
local::WeierstrassLocal parse_local(const nlohmann::json& doc);
// orders, classification, residual slice, mu(f, g) and the Milnor number of the residual discriminant at the origin
nlohmann::json local_report(const local::WeierstrassLocal& w);

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace ecy::report
