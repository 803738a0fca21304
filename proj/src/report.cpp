#include "ecy/report.hpp"

#include "ecy/error.hpp"
#include "ecy/liealg.hpp"

#include <fmt/format.h>
#include <toml.hpp>

#include <fstream>
#include <sstream>

namespace ecy::report {

using nlohmann::json;

namespace {

const char* strictness_name(fibers::Strictness s) { return s == fibers::Strictness::Strict ? "strict" : "warn"; }
const char* output_name(OutputFormat o) { return o == OutputFormat::Json ? "json" : "text"; }

template <class T>
T field(const json& doc, const char* key, const char* what) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(fmt::format("{}: field '{}' missing or of the wrong type", what, key));
  }
}

json toml_node(const toml::node& n) {
  if (auto t = n.as_table()) {
    json out = json::object();
    for (const auto& [k, v] : *t) out[std::string(k.str())] = toml_node(v);
    return out;
  }
  if (auto a = n.as_array()) {
    json out = json::array();
    for (const auto& v : *a) out.push_back(toml_node(v));
    return out;
  }
  if (auto v = n.as_string()) return v->get();
  if (auto v = n.as_integer()) return v->get();
  if (auto v = n.as_floating_point()) return v->get();
  if (auto v = n.as_boolean()) return v->get();
  throw ConfigError("unsupported TOML value (dates and times are not accepted)");
}

Rational int_ratio(const json& j) { return rational_from_json(j); }

json opt_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }
std::optional<Int> opt_int_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Int>();
}

liealg::Reality reality_from_name(const std::string& s) {
  for (auto r : {liealg::Reality::Real, liealg::Reality::Complex, liealg::Reality::Quaternionic})
    if (s == liealg::reality_name(r)) return r;
  throw ConfigError("unknown reality '" + s + "'");
}

json euler_to_json(const euler::EulerBreakdown& e) {
  return {{"P1_points", rational_to_json(e.term_P1)},
          {"P2_points", rational_to_json(e.term_P2)},
          {"sigma1", rational_to_json(e.term_sigma1)},
          {"sigma0_smooth", rational_to_json(e.term_sigma0_smooth)},
          {"cusps", rational_to_json(e.term_cusps)},
          {"chi_top", e.chi_top},
          {"R", e.r_value}};
}

euler::EulerBreakdown euler_from_json(const json& j) {
  euler::EulerBreakdown e;
  e.term_P1 = int_ratio(j.at("P1_points"));
  e.term_P2 = int_ratio(j.at("P2_points"));
  e.term_sigma1 = int_ratio(j.at("sigma1"));
  e.term_sigma0_smooth = int_ratio(j.at("sigma0_smooth"));
  e.term_cusps = int_ratio(j.at("cusps"));
  e.chi_top = j.at("chi_top").get<Int>();
  e.r_value = j.at("R").get<Int>();
  return e;
}

json counts_to_json(const fibers::PointCounts& c) {
  return {{"g", c.g},   {"gprime", c.gprime}, {"B1", c.B1},     {"B2", c.B2},    {"C", c.C},
          {"Bhat", opt_int(c.Bhat)}, {"K2", c.K2}, {"K_Sigma1", c.KS}, {"Sigma1_sq", c.SS}};
}

fibers::PointCounts counts_from_json(const json& j) {
  fibers::PointCounts c;
  c.g = j.at("g").get<Int>();
  c.gprime = j.at("gprime").get<Int>();
  c.B1 = j.at("B1").get<Int>();
  c.B2 = j.at("B2").get<Int>();
  c.C = j.at("C").get<Int>();
  c.Bhat = opt_int_from(j.at("Bhat"));
  c.K2 = j.at("K2").get<Int>();
  c.KS = j.at("K_Sigma1").get<Int>();
  c.SS = j.at("Sigma1_sq").get<Int>();
  return c;
}

json spectrum_to_json(const spectrum::MatterSpectrum& s) {
  json entries = json::array();
  for (const auto& e : s.entries)
    entries.push_back({{"rep", liealg::rep_name(e.rep.rep)},
                       {"dimension", e.rep.dimension},
                       {"zero_weights", e.rep.zero_weights},
                       {"reality", liealg::reality_name(e.rep.reality)},
                       {"delta", rational_to_json(e.rep.delta)},
                       {"multiplicity", rational_to_json(e.multiplicity)},
                       {"source", spectrum::source_name(e.source)}});
  return {{"group", liealg::group_label(s.group)},
          {"entries", entries},
          {"rho_hat", s.rho_hat ? json(liealg::rep_name(*s.rho_hat)) : json(nullptr)},
          {"Bhat", opt_int(s.Bhat)}};
}

spectrum::MatterSpectrum spectrum_from_json(const json& j, const liealg::GroupId& group) {
  spectrum::MatterSpectrum s;
  s.group = group;
  for (const auto& e : j.at("entries")) {
    spectrum::SpectrumEntry entry;
    entry.rep.group = group;
    entry.rep.rep = liealg::rep_from_name(e.at("rep").get<std::string>());
    entry.rep.dimension = e.at("dimension").get<int>();
    entry.rep.zero_weights = e.at("zero_weights").get<int>();
    entry.rep.reality = reality_from_name(e.at("reality").get<std::string>());
    entry.rep.delta = int_ratio(e.at("delta"));
    entry.multiplicity = int_ratio(e.at("multiplicity"));
    entry.source = spectrum::source_from_name(e.at("source").get<std::string>());
    s.entries.push_back(entry);
  }
  if (!j.at("rho_hat").is_null()) s.rho_hat = liealg::rep_from_name(j.at("rho_hat").get<std::string>());
  s.Bhat = opt_int_from(j.at("Bhat"));
  return s;
}

json anomaly_to_json(const anomaly::AnomalyReport& a) {
  json counts = json::object();
  for (const auto& [rep, n] : a.counts) counts[liealg::rep_name(rep)] = rational_to_json(n);
  return {{"applicable", a.applicable},
          {"quadratic", rational_to_json(a.quad_residual)},
          {"quartic_squared", rational_to_json(a.quartic_sq_residual)},
          {"quartic_independent",
           a.quartic_indep_residual ? rational_to_json(*a.quartic_indep_residual) : json(nullptr)},
          {"gs_base", a.gs_base_residual},
          {"counts", counts},
          {"pass", a.pass}};
}

anomaly::AnomalyReport anomaly_from_json(const json& j) {
  anomaly::AnomalyReport a;
  a.applicable = j.at("applicable").get<bool>();
  a.quad_residual = int_ratio(j.at("quadratic"));
  a.quartic_sq_residual = int_ratio(j.at("quartic_squared"));
  if (!j.at("quartic_independent").is_null()) a.quartic_indep_residual = int_ratio(j.at("quartic_independent"));
  a.gs_base_residual = j.at("gs_base").get<Int>();
  for (const auto& [k, v] : j.at("counts").items()) a.counts[liealg::rep_from_name(k)] = int_ratio(v);
  a.pass = j.at("pass").get<bool>();
  return a;
}

json prediction_to_json(const spectrum::PredictionReport& p) {
  return {{"applicable", p.applicable}, {"case", p.case_name}, {"predicted", p.predicted},
          {"actual", p.actual},         {"pass", p.pass}};
}

spectrum::PredictionReport prediction_from_json(const json& j) {
  spectrum::PredictionReport p;
  p.applicable = j.at("applicable").get<bool>();
  p.case_name = j.at("case").get<std::string>();
  p.predicted = j.at("predicted").get<Int>();
  p.actual = j.at("actual").get<Int>();
  p.pass = j.at("pass").get<bool>();
  return p;
}

fibers::GeometrySetup make_setup(const RunConfig& config) {
  fibers::GeometrySetup setup{resolve_base(config.base), std::nullopt, {}};
  if (config.sigma1) {
    setup.sigma1 = setup.base.divisor(*config.sigma1);
    setup.fiber = fibers::parse_fiber(config.kodaira, config.monodromy);
  }
  return setup;
}

}  // namespace

json rational_to_json(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw TableError("rational " + q.get_str() + " exceeds the serializable range");
  return {{"num", q.get_num().get_si()}, {"den", q.get_den().get_si()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return make_rational(j.get<Int>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ConfigError("rational must be an integer or {\"num\", \"den\"}");
  const Int den = j.at("den").get<Int>();
  if (den == 0) throw ConfigError("rational with zero denominator");
  return make_rational(j.at("num").get<Int>(), den);
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a table");
  static const char* known[] = {"version", "base", "sigma1", "fiber", "strictness", "output"};
  for (const auto& [k, v] : doc.items())
    if (std::find(std::begin(known), std::end(known), k) == std::end(known))
      throw ConfigError("unknown config field '" + k + "'");
  RunConfig c;
  c.version = field<int>(doc, "version", "config");
  if (c.version != kConfigVersion)
    throw ConfigError(fmt::format("config version {} is not supported (expected {})", c.version, kConfigVersion));
  if (doc.contains("base")) c.base = doc.at("base");
  resolve_base(c.base);
  if (doc.contains("sigma1")) {
    c.sigma1 = field<std::vector<Int>>(doc, "sigma1", "config");
    if (!doc.contains("fiber")) throw ConfigError("config with sigma1 needs a fiber");
  }
  if (doc.contains("fiber")) {
    const json& f = doc.at("fiber");
    c.kodaira = field<std::string>(f, "kodaira", "fiber");
    if (f.contains("monodromy")) c.monodromy = field<std::string>(f, "monodromy", "fiber");
    fibers::parse_fiber(c.kodaira, c.monodromy);
  }
  if (doc.contains("strictness")) {
    const auto s = field<std::string>(doc, "strictness", "config");
    if (s == "strict") c.strictness = fibers::Strictness::Strict;
    else if (s == "warn") c.strictness = fibers::Strictness::Warn;
    else throw ConfigError("strictness must be strict or warn");
  }
  if (doc.contains("output")) {
    const auto o = field<std::string>(doc, "output", "config");
    if (o == "json") c.output = OutputFormat::Json;
    else if (o == "text") c.output = OutputFormat::Text;
    else throw ConfigError("output must be json or text");
  }
  return c;
}

json toml_to_json(const std::string& text) {
  try {
    return toml_node(toml::parse(text));
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("TOML: ") + std::string(e.description()));
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool is_toml = path.size() >= 5 && path.substr(path.size() - 5) == ".toml";
  if (is_toml) return parse_config(toml_to_json(buf.str()));
  try {
    return parse_config(json::parse(buf.str()));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("JSON: ") + e.what());
  }
}

json config_to_json(const RunConfig& c) {
  json doc = {{"version", c.version},
              {"base", c.base},
              {"strictness", strictness_name(c.strictness)},
              {"output", output_name(c.output)}};
  if (c.sigma1) {
    doc["sigma1"] = *c.sigma1;
    doc["fiber"] = {{"kodaira", c.kodaira}, {"monodromy", c.monodromy}};
  }
  return doc;
}

lattice::BaseSurface resolve_base(const json& base) {
  if (!base.is_object()) throw ConfigError("base must be a table");
  if (base.contains("builtin")) {
    const auto name = field<std::string>(base, "builtin", "base");
    std::optional<int> n;
    if (base.contains("n")) n = field<int>(base, "n", "base");
    return lattice::builtin_base(name, n);
  }
  if (base.contains("custom")) return lattice::load_base(base.at("custom"));
  throw ConfigError("base needs 'builtin' or 'custom'");
}

bool Report::agree() const {
  return r_geometric && r_representation && *r_geometric == *r_representation;
}

bool Report::pass() const {
  if (!valid() || !consistency_failures.empty() || !r_geometric) return false;
  if (smooth) return *r_geometric == 0;
  return agree() && anomaly && anomaly->pass;
}

int report_exit_code(const Report& r) {
  if (!r.valid()) return exit_code(ErrorKind::Validity);
  return r.pass() ? 0 : exit_code(ErrorKind::Internal);
}

Report run_report(const RunConfig& config) {
  Report r;
  r.config = config;
  const fibers::GeometrySetup setup = make_setup(config);
  r.smooth = !setup.sigma1;
  if (r.smooth) {
    const auto& rec = euler::smooth_record();
    r.counts = fibers::point_counts(setup);
    r.euler = euler::euler_breakdown(setup, r.counts, rec);
    r.r_geometric = euler::r_geometric(setup, r.counts, rec);
    return r;
  }
  const auto rec = fibers::record_for(setup.fiber);
  r.row = rec.label();
  r.group = liealg::group_label(rec.group);
  r.counts = fibers::point_counts(setup, config.strictness, &r.warnings);
  try {
    r.counts.C = euler::cusp_count(setup, r.counts, rec);
    r.consistency_failures = fibers::consistency_check(setup, r.counts).failures;
    r.euler = euler::euler_breakdown(setup, r.counts, rec);
    r.r_geometric = euler::r_geometric(setup, r.counts, rec);
    r.spectrum = spectrum::build_spectrum(setup, r.counts);
    r.r_representation = spectrum::r_representation(*r.spectrum, r.counts);
    r.h_charged = spectrum::h_charged(*r.r_representation, rec.group);
    r.anomaly = anomaly::anomaly_check(setup, r.counts, *r.spectrum);
    r.prediction = spectrum::physics_prediction_check(setup, r.counts, *r.r_representation);
  } catch (const ValidityError& e) {
    if (config.strictness == fibers::Strictness::Strict) throw;
    r.warnings.push_back(e.what());
  }
  return r;
}

json report_to_json(const Report& r) {
  json doc = {{"config", config_to_json(r.config)},
              {"smooth", r.smooth},
              {"row", r.row},
              {"group", r.group},
              {"counts", counts_to_json(r.counts)},
              {"euler", r.euler ? euler_to_json(*r.euler) : json(nullptr)},
              {"r_geometric", opt_int(r.r_geometric)},
              {"r_representation", opt_int(r.r_representation)},
              {"h_charged", opt_int(r.h_charged)},
              {"spectrum", r.spectrum ? spectrum_to_json(*r.spectrum) : json(nullptr)},
              {"anomaly", r.anomaly ? anomaly_to_json(*r.anomaly) : json(nullptr)},
              {"prediction", r.prediction ? prediction_to_json(*r.prediction) : json(nullptr)},
              {"consistency_failures", r.consistency_failures},
              {"warnings", r.warnings},
              {"valid", r.valid()},
              {"pass", r.pass()}};
  return doc;
}

Report report_from_json(const json& doc) {
  try {
    Report r;
    r.config = parse_config(doc.at("config"));
    r.smooth = doc.at("smooth").get<bool>();
    r.row = doc.at("row").get<std::string>();
    r.group = doc.at("group").get<std::string>();
    r.counts = counts_from_json(doc.at("counts"));
    if (!doc.at("euler").is_null()) r.euler = euler_from_json(doc.at("euler"));
    r.r_geometric = opt_int_from(doc.at("r_geometric"));
    r.r_representation = opt_int_from(doc.at("r_representation"));
    r.h_charged = opt_int_from(doc.at("h_charged"));
    if (!doc.at("spectrum").is_null()) {
      const auto group = fibers::record_for(fibers::parse_fiber(r.config.kodaira, r.config.monodromy)).group;
      r.spectrum = spectrum_from_json(doc.at("spectrum"), group);
    }
    if (!doc.at("anomaly").is_null()) r.anomaly = anomaly_from_json(doc.at("anomaly"));
    if (!doc.at("prediction").is_null()) r.prediction = prediction_from_json(doc.at("prediction"));
    r.consistency_failures = doc.at("consistency_failures").get<std::vector<std::string>>();
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const Report& r) {
  std::string out;
  auto line = [&out](const std::string& k, const std::string& v) { out += fmt::format("{:<18} {}\n", k + ":", v); };
  auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  line("base", r.config.base.dump());
  if (r.smooth) {
    line("model", "smooth Weierstrass");
  } else {
    line("row", r.row);
    line("group", r.group);
    line("sigma1", json(*r.config.sigma1).dump());
    const auto& c = r.counts;
    line("g, g'", fmt::format("{}, {}", c.g, c.gprime));
    line("B1, B2, C", fmt::format("{}, {}, {}", c.B1, c.B2, c.C));
    if (c.Bhat) line("Bhat", std::to_string(*c.Bhat));
  }
  line("K^2", std::to_string(r.counts.K2));
  if (r.euler) {
    const auto& e = *r.euler;
    line("chi/2 P1 points", to_string(e.term_P1));
    line("chi/2 P2 points", to_string(e.term_P2));
    line("chi/2 Sigma1", to_string(e.term_sigma1));
    line("chi/2 Sigma0", to_string(e.term_sigma0_smooth));
    line("chi/2 cusps", to_string(e.term_cusps));
    line("chi_top", std::to_string(e.chi_top));
  }
  line("R geometric", opt(r.r_geometric));
  if (!r.smooth) {
    line("R representation", opt(r.r_representation));
    line("H_ch", opt(r.h_charged));
  }
  if (r.spectrum)
    for (const auto& e : r.spectrum->entries)
      line(fmt::format("  {} ({})", liealg::rep_name(e.rep.rep), spectrum::source_name(e.source)),
           fmt::format("{} x dim {}", to_string(e.multiplicity), e.rep.dimension));
  if (r.anomaly && r.anomaly->applicable) {
    const auto& a = *r.anomaly;
    line("anomaly", fmt::format("quad {} quartic {} indep {} base {}", to_string(a.quad_residual),
                                to_string(a.quartic_sq_residual),
                                a.quartic_indep_residual ? to_string(*a.quartic_indep_residual) : "-",
                                a.gs_base_residual));
  }
  for (const auto& f : r.consistency_failures) line("inconsistent", f);
  for (const auto& w : r.warnings) line("warning", w);
  line("result", r.pass() ? "pass" : "FAIL");
  return out;
}

std::vector<SweepItem> sweep(const RunConfig& config, int bound) {
  if (bound < 0) throw ConfigError("bound must be nonnegative");
  const auto base = resolve_base(config.base);
  const int rank = base.lattice->rank();
  std::vector<SweepItem> items;
  std::vector<Int> v(rank, 0);
  while (true) {
    int i = rank - 1;
    while (i >= 0 && v[i] == bound) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    SweepItem item;
    item.sigma1 = v;
    RunConfig c = config;
    c.sigma1 = v;
    try {
      item.report = run_report(c);
    } catch (const Error& e) {
      item.skip_reason = e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

json sweep_to_json(const std::vector<SweepItem>& items) {
  json out = json::array();
  for (const auto& it : items) {
    if (!it.report) {
      out.push_back({{"sigma1", it.sigma1}, {"skipped", it.skip_reason}});
      continue;
    }
    const auto& r = *it.report;
    out.push_back({{"sigma1", it.sigma1},
                   {"g", r.counts.g},
                   {"gprime", r.counts.gprime},
                   {"B1", r.counts.B1},
                   {"B2", r.counts.B2},
                   {"C", r.counts.C},
                   {"chi_top", r.euler ? json(r.euler->chi_top) : json(nullptr)},
                   {"r_geometric", opt_int(r.r_geometric)},
                   {"r_representation", opt_int(r.r_representation)},
                   {"anomaly_pass", r.anomaly ? json(r.anomaly->pass) : json(nullptr)},
                   {"warnings", r.warnings},
                   {"pass", r.pass()}});
  }
  return out;
}

std::string sweep_to_text(const std::vector<SweepItem>& items) {
  std::string out;
  for (const auto& it : items) {
    const std::string s = json(it.sigma1).dump();
    if (!it.report) {
      out += fmt::format("{:<10} skipped: {}\n", s, it.skip_reason);
      continue;
    }
    const auto& r = *it.report;
    out += fmt::format("{:<10} g={} B1={} B2={} C={} R={}/{} {}\n", s, r.counts.g, r.counts.B1, r.counts.B2,
                       r.counts.C, r.r_geometric ? std::to_string(*r.r_geometric) : "-",
                       r.r_representation ? std::to_string(*r.r_representation) : "-",
                       r.pass() ? "pass" : "FAIL");
  }
  return out;
}

json tables(int max_n, int max_k, int max_m) {
  json rows = json::array();
  for (const auto& rec : fibers::all_records(max_n, max_k, max_m)) {
    json rloc = json::array();
    for (const auto& r : rec.rloc) rloc.push_back(r ? rational_to_json(*r) : json("NSR/NM"));
    json eps = json::array();
    for (const auto& e : rec.eps) eps.push_back(e ? json(*e) : json(nullptr));
    json mu = json::array();
    for (const auto& x : rec.mu) mu.push_back(x ? json(*x) : json(nullptr));
    rows.push_back({{"row", rec.label()},
                    {"kodaira", fibers::kodaira_symbol(rec.fiber)},
                    {"monodromy", fibers::monodromy_name(rec.fiber.monodromy)},
                    {"group", liealg::group_label(rec.group)},
                    {"orders", rec.orders},
                    {"m", rec.m},
                    {"mu_f", rec.mu_f},
                    {"mu_g", rec.mu_g},
                    {"mu", mu},
                    {"eps", eps},
                    {"d", rec.d},
                    {"dim_minus_rank", rec.dim_minus_rank},
                    {"rloc0", rational_to_json(rec.rloc0)},
                    {"rloc", rloc}});
  }
  json branching = json::array();
  for (const auto& b : liealg::branching_catalog(std::max({max_n, max_k, max_m}))) {
    json summands = json::array();
    for (const auto& s : b.summands)
      summands.push_back({{"rep", liealg::rep_name(s.rep)}, {"multiplicity", s.multiplicity}, {"conjugate", s.conjugate}});
    branching.push_back({{"parent", liealg::group_label(b.parent)},
                         {"subgroup", liealg::group_label(b.subgroup)},
                         {"enhancement", b.enhancement},
                         {"summands", summands}});
  }
  return {{"rows", rows}, {"branching", branching}};
}

local::WeierstrassLocal parse_local(const json& doc) {
  if (!doc.is_object()) throw ConfigError("local model must be a table");
  static const char* known[] = {"version", "truncation", "a1", "a2", "a3", "a4", "a6"};
  for (const auto& [k, v] : doc.items())
    if (std::find(std::begin(known), std::end(known), k) == std::end(known))
      throw ConfigError("unknown local model field '" + k + "'");
  if (field<int>(doc, "version", "local model") != kConfigVersion) throw ConfigError("unsupported local model version");
  std::optional<int> trunc;
  if (doc.contains("truncation")) {
    trunc = field<int>(doc, "truncation", "local model");
    if (*trunc < 0) throw ConfigError("truncation must be nonnegative");
  }
  auto coefficient = [&](const char* key) {
    local::Poly p = local::Poly::zero(trunc);
    if (!doc.contains(key)) return local::Poly();
    for (const auto& term : doc.at(key)) {
      if (!term.is_array() || term.size() != 3) throw ConfigError(std::string(key) + ": terms are [deg_s, deg_t, coeff]");
      Rational c;
      if (term[2].is_string()) {
        try {
          c = Rational(term[2].get<std::string>());
          c.canonicalize();
        } catch (const std::invalid_argument&) {
          throw ConfigError(std::string(key) + ": bad coefficient " + term[2].dump());
        }
      } else {
        c = rational_from_json(term[2]);
      }
      p += local::Poly::monomial(c, term[0].get<int>(), term[1].get<int>(), trunc);
    }
    return p;
  };
  return {coefficient("a1"), coefficient("a2"), coefficient("a3"), coefficient("a4"), coefficient("a6")};
}

json local_report(const local::WeierstrassLocal& w) {
  auto ord = [](int o) { return o == local::kInfiniteOrder ? json("inf") : json(o); };
  auto upoly = [](const local::UPoly& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(rational_to_json(c));
    return out;
  };
  json out = json::object();
  const auto v = local::vanishing_orders(w);
  json a = json::array();
  for (int o : v.a) a.push_back(ord(o));
  out["orders"] = {{"a", a}, {"f", ord(v.f)}, {"g", ord(v.g)}, {"disc", ord(v.disc)}};
  try {
    const auto ft = local::kodaira_classify_local(w);
    out["kodaira"] = fibers::kodaira_symbol(ft);
    out["monodromy"] = fibers::monodromy_name(ft.monodromy);
    try {
      out["group"] = liealg::group_label(fibers::record_for(ft).group);
    } catch (const ConfigError&) {
      out["group"] = nullptr;
    }
  } catch (const Error& e) {
    out["classification_error"] = e.what();
  }
  if (v.disc != local::kInfiniteOrder) {
    const auto res = local::residual_discriminant(w, v.disc);
    out["residual_slice"] = upoly(res.slice());
    try {
      if (res.at_origin() == 0) out["residual_milnor"] = local::milnor_number(res);
    } catch (const Error& e) {
      out["residual_milnor_error"] = e.what();
    }
  }
  try {
    const auto fg = local::f_g(w);
    out["mu_fg"] = local::local_mu(fg.f, fg.g);
  } catch (const Error& e) {
    out["mu_fg_error"] = e.what();
  }
  return out;
}

}  // namespace ecy::report
