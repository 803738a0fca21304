#include "ecy/error.hpp"
#include "ecy/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ecy;

namespace {

struct Options {
  std::string config;
  std::string output;
  std::string strictness;
  int bound = 3;
  int max_n = 12, max_k = 5, max_m = 16;
};

report::RunConfig configured(const Options& o) {
  report::RunConfig c = report::load_config(o.config);
  if (o.output == "json") c.output = report::OutputFormat::Json;
  if (o.output == "text") c.output = report::OutputFormat::Text;
  if (o.strictness == "strict") c.strictness = fibers::Strictness::Strict;
  if (o.strictness == "warn") c.strictness = fibers::Strictness::Warn;
  return c;
}

int run_report(const Options& o) {
  const auto c = configured(o);
  const auto r = report::run_report(c);
  if (c.output == report::OutputFormat::Json) std::cout << report::report_to_json(r).dump(2) << "\n";
  else std::cout << report::report_to_text(r);
  return report::report_exit_code(r);
}

int run_sweep(const Options& o) {
  auto c = configured(o);
  const auto items = report::sweep(c, o.bound);
  if (c.output == report::OutputFormat::Json) std::cout << report::sweep_to_json(items).dump(2) << "\n";
  else std::cout << report::sweep_to_text(items);
  for (const auto& it : items)
    if (it.report && it.report->valid() && !it.report->pass()) return exit_code(ErrorKind::Internal);
  return 0;
}

int run_tables(const Options& o) {
  std::cout << report::tables(o.max_n, o.max_k, o.max_m).dump(2) << "\n";
  return 0;
}

int run_local(const Options& o) {
  std::ifstream in(o.config);
  if (!in) throw ConfigError("cannot read " + o.config);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  const bool is_toml = o.config.size() >= 5 && o.config.substr(o.config.size() - 5) == ".toml";
  if (is_toml) {
    doc = report::toml_to_json(buf.str());
  } else {
    try {
      doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("JSON: ") + e.what());
    }
  }
  std::cout << report::local_report(report::parse_local(doc)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristic and matter spectrum of elliptic Calabi-Yau threefolds"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> outputs{"json", "text"};
  const std::vector<std::string> levels{"strict", "warn"};

  auto* rep = app.add_subcommand("report", "full report for one configuration");
  rep->add_option("--config", o.config, "JSON or TOML config")->required()->check(CLI::ExistingFile);
  rep->add_option("--output", o.output)->check(CLI::IsMember(outputs));
  rep->add_option("--strictness", o.strictness)->check(CLI::IsMember(levels));

  auto* sw = app.add_subcommand("sweep", "all Sigma1 with coefficients in [0, bound]");
  sw->add_option("--config", o.config, "base and fiber; sigma1 is ignored")->required()->check(CLI::ExistingFile);
  sw->add_option("--output", o.output)->check(CLI::IsMember(outputs));
  sw->add_option("--strictness", o.strictness)->check(CLI::IsMember(levels));
  sw->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);

  auto* tab = app.add_subcommand("tables", "dump the instantiated fiber tables and branching catalog");
  tab->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
  tab->add_option("--max-k", o.max_k)->check(CLI::PositiveNumber);
  tab->add_option("--max-m", o.max_m)->check(CLI::Range(7, 64));

  auto* loc = app.add_subcommand("local", "local Weierstrass model around a point of Sigma1");
  loc->add_option("--config", o.config, "a1..a6 coefficient document")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(ErrorKind::Config);
  }

  try {
    if (*rep) return run_report(o);
    if (*sw) return run_sweep(o);
    if (*tab) return run_tables(o);
    return run_local(o);
  } catch (const ValidityError& e) {
    std::cerr << fmt::format("validity error ({}): {}\n", violation_name(e.violation()), e.what());
    return exit_code(e.kind());
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code(ErrorKind::Internal);
  }
}
