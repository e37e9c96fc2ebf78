/*
 * Copyright 2026 The gek Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "gek/distribution.hpp"
#include "gek/errors.hpp"
#include "gek/formal_series.hpp"
#include "gek/growth_law.hpp"
#include "gek/properties.hpp"
#include "gek/quantum.hpp"

namespace gek::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, std::vector<std::string>>& family_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"boltzmann", {}},
      {"renyi", {"alpha"}},
      {"tsallis_aq", {"a", "q"}},
      {"landsberg_vedral", {"q"}},
      {"zg", {"alpha"}},
      {"zg_alt", {"alpha"}},
      {"zq", {"q", "alpha"}},
      {"zk", {"k", "alpha"}},
      {"zab", {"a", "b", "alpha"}},
  };
  return keys;
}

const std::map<std::string, std::vector<std::string>>& group_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"identity", {}}, {"multiplicative", {"q"}}, {"kaniadakis", {"k"}}, {"abel", {"a", "b"}}, {"series", {"horizon"}},
  };
  return keys;
}

bool uses_group(const std::string& family) { return family == "zg" || family == "zg_alt"; }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Rational parse_value(const std::string& text, const std::string& what) {
  try {
    return parse_rational(trim(text));
  } catch (const Error&) {
    throw UsageError(what + ": cannot parse '" + text + "' as a number");
  }
}

double parse_double(const std::string& text, const std::string& flag) { return parse_value(text, flag).get_d(); }

int parse_int(const std::string& text, const std::string& flag) {
  const Rational v = parse_value(text, flag);
  if (v.get_den() != 1 || !v.get_num().fits_sint_p()) throw UsageError(flag + ": expected an integer, got '" + text + "'");
  return static_cast<int>(v.get_num().get_si());
}

std::map<std::string, Rational> parse_params(const std::string& text) {
  std::map<std::string, Rational> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--params: expected key=value, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    if (key.empty()) throw UsageError("--params: empty key in '" + item + "'");
    if (out.contains(key)) throw UsageError("--params: duplicate key '" + key + "'");
    out.emplace(key, parse_value(item.substr(eq + 1), "--params " + key));
  }
  return out;
}

SweepRange parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--param: expected key=lo:hi:step, got '" + text + "'");
  const auto parts = split(std::string_view(text).substr(eq + 1), ':');
  if (parts.size() != 3) throw UsageError("--param: malformed sweep range '" + text + "', expected key=lo:hi:step");
  SweepRange r{trim(text.substr(0, eq)), parse_value(parts[0], "--param lo"), parse_value(parts[1], "--param hi"),
               parse_value(parts[2], "--param step")};
  if (r.key.empty()) throw UsageError("--param: empty key");
  if (r.step <= 0) throw UsageError("--param: sweep step must be positive");
  if (r.hi < r.lo) throw UsageError("--param: sweep range has hi < lo");
  if ((r.hi - r.lo) / r.step > 100000) throw UsageError("--param: sweep has more than 100000 points");
  return r;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_value(item, flag));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_int(item, flag));
  return out;
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw UsageError(source + ": expected a non-negative integer seed, got '" + text + "'");
  return v;
}

bool is_shorthand(const std::string& d) {
  if (d.size() < 2 || (d[0] != 'u' && d[0] != 'd')) return false;
  return std::all_of(d.begin() + 1, d.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_inline(const std::string& d) { return d.find(',') != std::string::npos; }

Distribution load_distribution(const std::string& d) {
  if (is_shorthand(d)) {
    const auto w = static_cast<std::size_t>(std::stoull(d.substr(1)));
    if (w == 0) fail(ErrorKind::kInput, "distribution size must be positive");
    return d[0] == 'u' ? Distribution::uniform(w) : Distribution::delta(w);
  }
  std::vector<double> p;
  if (is_inline(d)) {
    for (const auto& item : split(d, ',')) p.push_back(parse_rational(trim(item)).get_d());
    return Distribution(std::move(p));
  }
  std::ifstream in(d);
  if (!in) fail(ErrorKind::kInput, "cannot open distribution file '" + d + "'");
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    p.push_back(parse_rational(line).get_d());
  }
  return Distribution(std::move(p));
}

double param(const RunConfig& c, const std::string& key) { return c.params.at(key).get_d(); }

void check_keys(const std::map<std::string, Rational>& params, const std::vector<std::string>& allowed,
                const std::vector<std::string>& required, const std::string& owner) {
  for (const auto& [key, value] : params)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw UsageError("unknown parameter '" + key + "' for " + owner);
  for (const auto& key : required)
    if (!params.contains(key)) throw UsageError("missing parameter '" + key + "' for " + owner);
}

std::vector<std::string> allowed_family_keys(const RunConfig& c) {
  auto keys = family_keys().at(c.family);
  if (uses_group(c.family)) {
    const auto& g = group_keys().at(c.group);
    keys.insert(keys.end(), g.begin(), g.end());
  }
  return keys;
}

void validate_family(RunConfig& c, bool sweeping) {
  if (!family_keys().contains(c.family)) throw UsageError("unknown family '" + c.family + "'");
  if (!group_keys().contains(c.group)) throw UsageError("unknown group '" + c.group + "'");
  auto allowed = allowed_family_keys(c);
  auto required = allowed;
  std::erase(required, std::string("horizon"));
  if (sweeping) std::erase(required, c.sweep->key);
  if (c.growth_rho && c.family == "tsallis_aq") {
    if (c.params.contains("q")) throw UsageError("parameter 'q' is derived from --rho for tsallis_aq");
    std::erase(required, std::string("q"));
  }
  check_keys(c.params, allowed, required, c.family);
  if (sweeping && std::find(allowed.begin(), allowed.end(), c.sweep->key) == allowed.end())
    throw UsageError("--param: unknown parameter '" + c.sweep->key + "' for " + c.family);
  if (uses_group(c.family) && c.group == "series" && c.b_sequence.empty())
    throw UsageError("group 'series' needs --b");
}

void validate_spec(const RunConfig& c) {
  try {
    build_spec(c).validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

class Output {
 public:
  Output(const RunConfig& c, std::ostream& out) : path_(c.output_path), out_(out) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (path_.empty()) {
      out_ << buffer_.str();
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) fail(ErrorKind::kInput, "cannot write output file '" + path_ + "'");
    f << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

Json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void emit_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

Json params_json(const RunConfig& c) {
  Json j = Json::object();
  for (const auto& [k, v] : c.params) j[k] = jnum(v.get_d());
  return j;
}

Json header_json(const RunConfig& c, const std::string& command) {
  Json j;
  j["schema_version"] = "1";
  j["command"] = command;
  if (!c.family.empty()) j["family"] = c.family;
  if (uses_group(c.family) || c.family.empty()) j["group"] = c.group;
  j["params"] = params_json(c);
  return j;
}

void emit_scalar(const RunConfig& c, std::ostream& os, const std::string& command,
                 const std::vector<std::pair<std::string, double>>& inputs, double value) {
  if (!c.format) {
    os << format_number(value) << '\n';
    return;
  }
  if (*c.format == Format::kJson) {
    Json j = header_json(c, command);
    for (const auto& [k, v] : inputs) j[k] = jnum(v);
    j["value"] = jnum(value);
    emit_json(os, j);
    return;
  }
  std::vector<std::string> header, row;
  for (const auto& [k, v] : inputs) {
    header.push_back(k);
    row.push_back(format_number(v));
  }
  header.emplace_back("value");
  row.push_back(format_number(value));
  emit_csv(os, header, {row});
}

Json report_json(const props::PropertyReport& r) {
  Json j;
  j["property"] = r.property;
  j["asserted"] = r.asserted;
  j["passed"] = r.passed();
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["skipped"] = r.skipped;
  j["worst_residual"] = jnum(r.worst_residual);
  j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.sub_reports.empty()) {
    j["sub_reports"] = Json::array();
    for (const auto& s : r.sub_reports) j["sub_reports"].push_back(report_json(s));
  }
  return j;
}

void report_rows(const props::PropertyReport& r, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  const std::string name = prefix.empty() ? r.property : prefix + "/" + r.property;
  rows.push_back({name, r.asserted ? "true" : "false", r.passed() ? "true" : "false", std::to_string(r.trials),
                  std::to_string(r.failures), std::to_string(r.skipped), format_number(r.worst_residual)});
  for (const auto& s : r.sub_reports) report_rows(s, name, rows);
}

// Phi for the non-Z families, as a group function applied with alpha = 0.
std::optional<std::pair<GroupFunction, double>> composition_group(const EntropySpec& spec) {
  if (spec.is_z_family()) {
    if (std::holds_alternative<EntropySpec::AltNewZ>(spec.family)) return std::pair{*spec.group(), 0.0};
    return std::pair{*spec.group(), *spec.alpha()};
  }
  if (std::holds_alternative<EntropySpec::Boltzmann>(spec.family)) return std::pair{GroupFunction::identity(), 0.0};
  if (const auto* t = std::get_if<EntropySpec::TsallisAQ>(&spec.family))
    return std::pair{GroupFunction::multiplicative(t->q), 0.0};
  if (const auto* l = std::get_if<EntropySpec::LandsbergVedral>(&spec.family)) {
    if (2.0 - l->q > 0.0) return std::pair{GroupFunction::multiplicative(2.0 - l->q), 0.0};
  }
  return std::nullopt;
}

int run_verify(const RunConfig& c, std::ostream& os) {
  const EntropySpec spec = build_spec(c);
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = {"composability", "group", "sk", "schur", "extensivity", "uniform"};
  } else {
    for (const auto& s : split(c.suite, ',')) suites.push_back(trim(s));
  }

  std::vector<props::PropertyReport> reports;
  std::uint64_t offset = 0;
  for (const auto& suite : suites) {
    const std::uint64_t seed = c.seed + offset++;
    if (suite == "composability") {
      reports.push_back(props::check_composability(spec, c.trials, c.tolerance, seed));
    } else if (suite == "group") {
      if (const auto g = composition_group(spec)) {
        reports.push_back(props::check_group_axioms_numeric(g->first, g->second, c.trials, c.tolerance, seed));
      } else {
        props::PropertyReport r{.property = "group_axioms", .seed = seed, .asserted = false};
        r.note = "no group-function form of the composition law for these parameters";
        reports.push_back(std::move(r));
      }
    } else if (suite == "sk") {
      reports.push_back(props::check_sk_axioms(spec, c.trials, seed));
    } else if (suite == "schur") {
      reports.push_back(props::check_schur_concavity(spec, c.trials, seed));
    } else if (suite == "extensivity") {
      if (spec.is_z_family() || std::holds_alternative<EntropySpec::Boltzmann>(spec.family)) {
        const std::vector<double> ns = {1e2, 1e3, 1e4};
        reports.push_back(props::check_extensivity_roundtrip(spec, c.lambda, ns));
      } else {
        props::PropertyReport r{.property = "extensivity_roundtrip", .seed = seed, .asserted = false};
        r.note = "no group-solved growth law for this family";
        reports.push_back(std::move(r));
      }
    } else if (suite == "uniform") {
      reports.push_back(props::check_composability_uniform(spec, 8, c.tolerance));
    }
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && (!r.asserted || r.passed());

  if (c.format == Format::kCsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) report_rows(r, "", rows);
    emit_csv(os, {"property", "asserted", "passed", "trials", "failures", "skipped", "worst_residual"}, rows);
  } else {
    Json j = header_json(c, "verify");
    j["description"] = spec.describe();
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["tolerance"] = jnum(c.tolerance);
    j["passed"] = passed;
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    emit_json(os, j);
  }
  return passed ? 0 : 1;
}

series::TruncatedSeries group_series(const RunConfig& c) {
  const auto& p = c.params;
  if (c.group == "identity") return series::TruncatedSeries::identity(c.order);
  if (c.group == "multiplicative") return series::multiplicative_exponential_series(p.at("q"), c.order);
  if (c.group == "kaniadakis") return series::sinh_series(p.at("k"), c.order);
  if (c.group == "abel") return series::abel_exponential_series(p.at("a"), p.at("b"), c.order);
  return series::series_from_b_sequence(c.b_sequence, c.order);
}

std::vector<std::string> fraction_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

int run_series_invert(const RunConfig& c, std::ostream& os) {
  const auto f = series::series_from_b_sequence(c.b_sequence, c.order);
  const auto a = series::b_sequence_of(series::reversion(f));
  if (c.format == Format::kJson) {
    Json j;
    j["schema_version"] = "1";
    j["command"] = "series invert";
    j["order"] = c.order;
    j["b"] = fraction_strings(c.b_sequence);
    j["a"] = fraction_strings(a);
    emit_json(os, j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < a.size(); ++k) rows.push_back({std::to_string(k), to_fraction_string(a[k])});
    emit_csv(os, {"k", "a_k"}, rows);
  }
  return 0;
}

int run_grouplaw(const RunConfig& c, std::ostream& os) {
  const auto psi = series::group_law_from_G(group_series(c), c.order);
  const auto axioms = series::verify_group_axioms(psi);
  const auto terms = psi.nonzero_terms();
  if (c.format == Format::kJson) {
    Json j = header_json(c, "grouplaw expand");
    j["order"] = c.order;
    j["terms"] = Json::array();
    for (const auto& [ij, v] : terms) j["terms"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", to_fraction_string(v)}});
    auto axiom = [](const series::AxiomCheck& a) {
      Json x;
      x["holds"] = a.holds;
      x["first_failure"] = a.first_failure;
      return x;
    };
    j["axioms"] = {{"identity", axiom(axioms.identity)},
                   {"commutativity", axiom(axioms.commutativity)},
                   {"associativity", axiom(axioms.associativity)}};
    emit_json(os, j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [ij, v] : terms) rows.push_back({std::to_string(ij.first), std::to_string(ij.second), to_fraction_string(v)});
    emit_csv(os, {"i", "j", "value"}, rows);
  }
  return axioms.all_hold() ? 0 : 1;
}

int run_entropy_sweep(const RunConfig& c, std::ostream& os) {
  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  RunConfig point = c;
  for (const auto& v : c.sweep->values()) {
    point.params[c.sweep->key] = v;
    const double value = evaluate(build_spec(point), load_distribution(c.dist)).value;
    rows.push_back({format_number(v.get_d()), format_number(value)});
    jrows.push_back({{c.sweep->key, jnum(v.get_d())}, {"entropy", jnum(value)}});
  }
  if (c.format == Format::kJson) {
    Json j = header_json(c, "entropy sweep");
    j["sweep"] = c.sweep->key;
    j["rows"] = jrows;
    emit_json(os, j);
  } else {
    emit_csv(os, {c.sweep->key, "entropy"}, rows);
  }
  return 0;
}

int run_extensivity(const RunConfig& c, std::ostream& os) {
  RunConfig resolved = c;
  std::optional<double> qstar;
  props::GrowthSolution solution;
  if (c.growth_rho && c.family == "tsallis_aq") {
    qstar = props::tsallis_qstar(param(c, "a"), *c.growth_rho);
    resolved.params["q"] = Rational(*qstar);
    solution.law.law = props::GrowthLaw::PowerLaw{*c.growth_rho};
    solution.valid = true;
  } else {
    solution = props::solve_growth_law(build_spec(c), c.lambda, c.horizon);
  }
  const EntropySpec spec = build_spec(resolved);

  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (double n = 1.0; n <= c.horizon * (1.0 + 1e-12); n *= 10.0) {
    double lw = std::numeric_limits<double>::quiet_NaN();
    double s = std::numeric_limits<double>::quiet_NaN();
    try {
      lw = solution.law.log_w(n);
      s = props::entropy_per_particle(spec, solution.law, n);
    } catch (const Error&) {
    }
    rows.push_back({format_number(n), format_number(lw), format_number(s)});
    jrows.push_back({{"N", jnum(n)}, {"log_W", jnum(lw)}, {"entropy_per_particle", jnum(s)}});
  }
  if (c.format == Format::kJson) {
    Json j = header_json(c, "extensivity solve");
    Json law;
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, props::GrowthLaw::PowerLaw>) {
            law["kind"] = "power";
            law["rho"] = jnum(l.rho);
          } else if constexpr (std::is_same_v<T, props::GrowthLaw::Exponential>) {
            law["kind"] = "exponential";
            law["lambda"] = jnum(l.lambda);
          } else {
            law["kind"] = "group";
            law["group"] = l.g.name();
            law["alpha"] = jnum(l.alpha);
            law["lambda"] = jnum(l.lambda);
          }
        },
        solution.law.law);
    j["law"] = law;
    if (qstar) j["qstar"] = jnum(*qstar);
    j["valid"] = solution.valid;
    j["restricted_from"] = solution.restricted_from ? jnum(*solution.restricted_from) : Json(nullptr);
    j["rows"] = jrows;
    emit_json(os, j);
  } else {
    emit_csv(os, {"N", "log_W", "entropy_per_particle"}, rows);
  }
  return 0;
}

double quantum_value(const RunConfig& c, const quantum::DensityMatrix& rho) {
  const EntropySpec spec = build_spec(c);
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, EntropySpec::Boltzmann>) {
          return quantum::von_neumann(rho);
        } else if constexpr (std::is_same_v<T, EntropySpec::Renyi>) {
          return quantum::quantum_renyi(f.alpha, rho);
        } else if constexpr (std::is_same_v<T, EntropySpec::ZGAlpha>) {
          return quantum::quantum_z_entropy(f.g, f.alpha, rho);
        } else if constexpr (std::is_same_v<T, EntropySpec::ZAB>) {
          return quantum::quantum_z_ab(f.a, f.b, f.alpha, rho);
        } else {
          return evaluate(spec, rho.spectrum()).value;
        }
      },
      spec.family);
}

int run_qentropy(const RunConfig& c, std::ostream& os) {
  std::ifstream in(c.rho_path);
  if (!in) fail(ErrorKind::kInput, "cannot open density matrix file '" + c.rho_path + "'");
  const auto rho = quantum::read_density_matrix(in);
  const double value = quantum_value(c, rho);
  if (c.format == Format::kJson) {
    Json j = header_json(c, "qentropy eval");
    j["dim"] = rho.dim();
    Json ev = Json::array();
    for (double l : rho.eigenvalues()) ev.push_back(jnum(l));
    j["eigenvalues"] = ev;
    j["value"] = jnum(value);
    emit_json(os, j);
    return 0;
  }
  emit_scalar(c, os, "qentropy eval", {}, value);
  return 0;
}

int run_lmg(const RunConfig& c, std::ostream& os) {
  const double alpha = c.extensive ? quantum::extensive_alpha(c.a, c.m) : *c.alpha;
  std::vector<int> ls;
  if (c.sweep_l) {
    for (int l = 1; l <= c.n / 2; ++l) ls.push_back(l);
  } else {
    ls.push_back(c.l);
  }
  std::vector<double> densities;
  for (int k : c.occupations) densities.push_back(static_cast<double>(k) / c.n);

  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (int l : ls) {
    const quantum::DickeSpec dicke{c.m, c.n, c.occupations, l};
    const double exact = quantum::lmg_exact_za0(dicke, c.a, alpha);
    double asymptotic = std::numeric_limits<double>::quiet_NaN();
    try {
      asymptotic = quantum::lmg_asymptotic_za0({c.a, c.m, alpha, static_cast<double>(l) / c.n, densities}, l);
    } catch (const Error&) {
    }
    const double ratio = exact / l;
    const double relative = exact / asymptotic;
    rows.push_back({std::to_string(l), format_number(exact), format_number(asymptotic), format_number(ratio),
                    format_number(relative)});
    jrows.push_back({{"L", l},
                     {"exact_entropy", jnum(exact)},
                     {"asymptotic_value", jnum(asymptotic)},
                     {"ratio", jnum(ratio)},
                     {"exact_over_asymptotic", jnum(relative)}});
  }
  if (c.format == Format::kJson) {
    Json j;
    j["schema_version"] = "1";
    j["command"] = "lmg demo";
    j["m"] = c.m;
    j["N"] = c.n;
    j["occupations"] = c.occupations;
    j["a"] = jnum(c.a);
    j["alpha"] = jnum(alpha);
    j["rows"] = jrows;
    emit_json(os, j);
  } else {
    emit_csv(os, {"L", "exact_entropy", "asymptotic_value", "ratio", "exact_over_asymptotic"}, rows);
  }
  return 0;
}

struct RawArgs {
  std::string family, group = "identity", params, param, dist, rho, output, format, seed, suite = "all";
  std::string b, order = "8", x, y, gamma = "1", lambda = "1", horizon = "1e6", growth_rho;
  std::string m, n, occupations, a, alpha, l;
  std::string trials = "1000", tolerance = "1e-10";
  bool extensive = false, sweep_l = false;
};

}  // namespace

std::vector<Rational> SweepRange::values() const {
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v = v + step) out.push_back(v);
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

EntropySpec build_spec(const RunConfig& c) {
  EntropySpec spec;
  const auto& f = c.family;
  auto p = [&](const char* key) { return param(c, key); };
  if (f == "boltzmann") spec.family = EntropySpec::Boltzmann{};
  else if (f == "renyi") spec.family = EntropySpec::Renyi{p("alpha")};
  else if (f == "tsallis_aq") spec.family = EntropySpec::TsallisAQ{p("a"), p("q")};
  else if (f == "landsberg_vedral") spec.family = EntropySpec::LandsbergVedral{p("q")};
  else if (f == "zg") spec.family = EntropySpec::ZGAlpha{build_group(c), p("alpha")};
  else if (f == "zg_alt") spec.family = EntropySpec::AltNewZ{build_group(c), p("alpha")};
  else if (f == "zq") spec.family = EntropySpec::ZQAlpha{p("q"), p("alpha")};
  else if (f == "zk") spec.family = EntropySpec::ZKAlpha{p("k"), p("alpha")};
  else if (f == "zab") spec.family = EntropySpec::ZAB{p("a"), p("b"), p("alpha")};
  else fail(ErrorKind::kInput, "unknown family '" + f + "'");
  spec.validate();
  return spec;
}

GroupFunction build_group(const RunConfig& c) {
  auto p = [&](const char* key) { return param(c, key); };
  if (c.group == "identity") return GroupFunction::identity();
  if (c.group == "multiplicative") return GroupFunction::multiplicative(p("q"));
  if (c.group == "kaniadakis") return GroupFunction::kaniadakis(p("k"));
  if (c.group == "abel") return GroupFunction::abel(p("a"), p("b"));
  if (c.group == "series") {
    const double horizon = c.params.contains("horizon") ? p("horizon") : 1.0;
    return GroupFunction::series_defined(series::series_from_b_sequence(c.b_sequence, c.order), horizon);
  }
  fail(ErrorKind::kInput, "unknown group '" + c.group + "'");
}

RunConfig parse_args(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
  CLI::App app{"Group entropies: evaluation, verification and series tools", "gek"};
  app.require_subcommand(1);
  RawArgs raw;

  auto family_opts = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--family", raw.family, "entropy family");
    if (required) o->required();
    s->add_option("--group", raw.group, "group function for zg and zg_alt");
    s->add_option("--params", raw.params, "comma-separated key=value list");
  };
  auto group_opts = [&](CLI::App* s) {
    s->add_option("--group,--family", raw.group, "identity|multiplicative|kaniadakis|abel|series");
    s->add_option("--params", raw.params, "comma-separated key=value list");
    s->add_option("--b,--coeffs", raw.b, "b-sequence b_0,b_1,... for the series group");
  };
  auto output_opts = [&](CLI::App* s) {
    s->add_option("--format", raw.format, "csv or json");
    s->add_option("--output", raw.output, "output file (default stdout)");
  };

  auto* entropy = app.add_subcommand("entropy", "classical entropies");
  entropy->require_subcommand(1);
  auto* eval = entropy->add_subcommand("eval", "evaluate an entropy on a distribution");
  family_opts(eval, true);
  eval->add_option("--dist", raw.dist, "uW, dW, inline p1,p2,... or a file")->required();
  output_opts(eval);
  auto* sweep = entropy->add_subcommand("sweep", "sweep one parameter");
  family_opts(sweep, true);
  sweep->add_option("--param", raw.param, "key=lo:hi:step")->required();
  sweep->add_option("--dist", raw.dist, "uW, dW, inline p1,p2,... or a file")->required();
  output_opts(sweep);

  auto* verify = app.add_subcommand("verify", "run property checks");
  family_opts(verify, true);
  verify->add_option("--suite", raw.suite, "composability,group,sk,schur,uniform or all");
  verify->add_option("--trials", raw.trials, "trials per check");
  verify->add_option("--tolerance,--tol", raw.tolerance, "relative tolerance for composability and group checks");
  verify->add_option("--seed", raw.seed, "random seed (default GEK_SEED or 1)");
  verify->add_option("--lambda", raw.lambda, "entropy per particle for the extensivity suite");
  output_opts(verify);

  auto* series_cmd = app.add_subcommand("series", "formal power series tools");
  series_cmd->require_subcommand(1);
  auto* invert = series_cmd->add_subcommand("invert", "compositional inverse of F(t) = sum b_k t^{k+1}/(k+1)");
  invert->add_option("--b,--coeffs", raw.b, "b_0,b_1,... (b_0 = 1)")->required();
  invert->add_option("--order", raw.order, "truncation order");
  output_opts(invert);

  auto* grouplaw = app.add_subcommand("grouplaw", "formal group laws");
  grouplaw->require_subcommand(1);
  auto* expand = grouplaw->add_subcommand("expand", "coefficients of G(G^{-1}(x) + G^{-1}(y))");
  group_opts(expand);
  expand->add_option("--order", raw.order, "truncation order");
  output_opts(expand);

  auto scalar_group_cmd = [&](const std::string& name, const std::string& help) {
    auto* top = app.add_subcommand(name, help);
    top->require_subcommand(1);
    auto* e = top->add_subcommand("eval", help);
    group_opts(e);
    e->add_option("--order", raw.order, "order of the series group");
    e->add_option("--x", raw.x, "argument")->required();
    output_opts(e);
    return e;
  };
  auto* log_eval = scalar_group_cmd("log", "group logarithm ln_G(x)");
  log_eval->add_option("--gamma", raw.gamma, "exponent gamma in ln_G(x) = G(gamma ln x)");
  auto* exp_eval = scalar_group_cmd("exp", "group exponential exp_G(x)");
  exp_eval->add_option("--gamma", raw.gamma, "exponent gamma");
  auto* chi_eval = scalar_group_cmd("chi", "group law chi(x, y)");
  chi_eval->add_option("--y", raw.y, "second argument")->required();

  auto* extensivity = app.add_subcommand("extensivity", "growth laws");
  extensivity->require_subcommand(1);
  auto* solve = extensivity->add_subcommand("solve", "solve S(W(N)) = lambda N and tabulate S/N");
  family_opts(solve, true);
  solve->add_option("--lambda", raw.lambda, "entropy per particle");
  solve->add_option("--horizon", raw.horizon, "largest N");
  solve->add_option("--rho", raw.growth_rho, "power-law exponent for tsallis_aq (q is set to q*)");
  output_opts(solve);

  auto* qentropy = app.add_subcommand("qentropy", "quantum entropies");
  qentropy->require_subcommand(1);
  auto* qeval = qentropy->add_subcommand("eval", "evaluate on a density matrix file");
  family_opts(qeval, false);
  qeval->add_option("--rho", raw.rho, "density matrix file")->required();
  output_opts(qeval);

  auto* lmg = app.add_subcommand("lmg", "LMG ground-state entanglement");
  lmg->require_subcommand(1);
  auto* demo = lmg->add_subcommand("demo", "exact block entropies against the asymptotic formula");
  demo->add_option("--m", raw.m, "su(m+1) type")->required();
  demo->add_option("--N", raw.n, "number of sites")->required();
  demo->add_option("--occupations", raw.occupations, "k_1,...,k_{m+1}")->required();
  demo->add_option("--a", raw.a, "entropy parameter a")->required();
  auto* alpha_opt = demo->add_option("--alpha", raw.alpha, "entropic index");
  auto* ext_opt = demo->add_flag("--extensive", raw.extensive, "use alpha = 1 - 2/(a m)");
  alpha_opt->excludes(ext_opt);
  demo->add_flag("--sweep-L", raw.sweep_l, "sweep L = 1..N/2");
  demo->add_option("--L", raw.l, "block size when not sweeping");
  output_opts(demo);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream out, err;
      app.exit(e, out, err);
      throw HelpRequested(out.str());
    }
    throw UsageError(e.what());
  }

  RunConfig c;
  c.family = raw.family;
  c.group = raw.group == "id" ? "identity" : raw.group == "tsallis" ? "multiplicative" : raw.group;
  c.params = parse_params(raw.params);
  if (!raw.format.empty()) {
    if (raw.format == "csv") c.format = Format::kCsv;
    else if (raw.format == "json") c.format = Format::kJson;
    else throw UsageError("--format: expected csv or json, got '" + raw.format + "'");
  }
  c.output_path = raw.output;
  if (!raw.seed.empty()) c.seed = parse_seed(raw.seed, "--seed");
  else if (env_seed) c.seed = parse_seed(*env_seed, "GEK_SEED");
  c.trials = parse_int(raw.trials, "--trials");
  if (c.trials <= 0) throw UsageError("--trials must be positive");
  c.tolerance = parse_double(raw.tolerance, "--tolerance");
  if (!(c.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  c.suite = raw.suite;
  c.order = parse_int(raw.order, "--order");
  if (c.order < 1 || c.order > 64) throw UsageError("--order must lie in [1, 64]");
  if (!raw.b.empty()) c.b_sequence = parse_rational_list(raw.b, "--b");

  auto need_file = [](const std::string& path, const std::string& flag) {
    if (!std::filesystem::is_regular_file(path)) throw UsageError(flag + ": file not found: '" + path + "'");
  };
  auto check_dist = [&] {
    if (!is_shorthand(c.dist) && !is_inline(c.dist)) need_file(c.dist, "--dist");
  };
  auto check_group = [&](bool numeric) {
    if (!group_keys().contains(c.group)) throw UsageError("unknown group '" + c.group + "'");
    check_keys(c.params, group_keys().at(c.group), c.group == "series" ? std::vector<std::string>{} : group_keys().at(c.group),
               c.group);
    if (c.group == "series" && c.b_sequence.empty()) throw UsageError("group 'series' needs --b");
    if (!numeric) return;
    try {
      (void)build_group(c);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  };

  if (eval->parsed()) {
    c.command = Command::kEntropyEval;
    c.dist = raw.dist;
    validate_family(c, false);
    validate_spec(c);
    check_dist();
  } else if (sweep->parsed()) {
    c.command = Command::kEntropySweep;
    c.dist = raw.dist;
    c.sweep = parse_sweep(raw.param);
    validate_family(c, true);
    RunConfig point = c;
    for (const auto& v : c.sweep->values()) {
      point.params[c.sweep->key] = v;
      validate_spec(point);
    }
    check_dist();
  } else if (verify->parsed()) {
    c.command = Command::kVerify;
    c.lambda = parse_double(raw.lambda, "--lambda");
    if (!(c.lambda > 0.0)) throw UsageError("--lambda must be positive");
    validate_family(c, false);
    validate_spec(c);
    const std::set<std::string> known = {"all", "composability", "group", "sk", "schur", "extensivity", "uniform"};
    for (const auto& s : split(c.suite, ','))
      if (!known.contains(trim(s)) || (trim(s) == "all" && c.suite != "all"))
        throw UsageError("--suite: unknown suite '" + s + "'");
  } else if (invert->parsed()) {
    c.command = Command::kSeriesInvert;
    if (!c.b_sequence.empty() && c.b_sequence[0] != 1) throw UsageError("--b: b_0 must be 1");
  } else if (expand->parsed()) {
    c.command = Command::kGrouplawExpand;
    check_group(false);
  } else if (log_eval->parsed() || exp_eval->parsed() || chi_eval->parsed()) {
    c.command = log_eval->parsed() ? Command::kLogEval : exp_eval->parsed() ? Command::kExpEval : Command::kChiEval;
    c.x = parse_double(raw.x, "--x");
    if (chi_eval->parsed()) c.y = parse_double(raw.y, "--y");
    c.gamma = parse_double(raw.gamma, "--gamma");
    check_group(true);
  } else if (solve->parsed()) {
    c.command = Command::kExtensivitySolve;
    c.lambda = parse_double(raw.lambda, "--lambda");
    c.horizon = parse_double(raw.horizon, "--horizon");
    if (!(c.horizon >= 1.0)) throw UsageError("--horizon must be >= 1");
    if (!raw.growth_rho.empty()) {
      c.growth_rho = parse_double(raw.growth_rho, "--rho");
      if (c.family != "tsallis_aq") throw UsageError("--rho applies to tsallis_aq only");
      if (!(*c.growth_rho > 0.0)) throw UsageError("--rho must be positive");
    }
    validate_family(c, false);
    if (!c.growth_rho) validate_spec(c);
  } else if (qeval->parsed()) {
    c.command = Command::kQentropyEval;
    if (c.family.empty()) c.family = "boltzmann";
    c.rho_path = raw.rho;
    validate_family(c, false);
    validate_spec(c);
    need_file(c.rho_path, "--rho");
  } else if (demo->parsed()) {
    c.command = Command::kLmgDemo;
    c.m = parse_int(raw.m, "--m");
    c.n = parse_int(raw.n, "--N");
    c.occupations = parse_int_list(raw.occupations, "--occupations");
    c.a = parse_double(raw.a, "--a");
    c.extensive = raw.extensive;
    c.sweep_l = raw.sweep_l;
    if (!c.extensive) {
      if (raw.alpha.empty()) throw UsageError("lmg demo needs --alpha or --extensive");
      c.alpha = parse_double(raw.alpha, "--alpha");
      if (*c.alpha == 1.0) throw UsageError("--alpha: alpha = 1 is excluded");
    }
    if (!c.sweep_l) {
      if (raw.l.empty()) throw UsageError("lmg demo needs --sweep-L or --L");
      c.l = parse_int(raw.l, "--L");
    }
    try {
      const double alpha = c.extensive ? quantum::extensive_alpha(c.a, c.m) : *c.alpha;
      if (alpha == 1.0 || !(alpha >= 0.0)) throw UsageError("alpha = " + format_number(alpha) + " is outside [0, 1) U (1, inf)");
      quantum::DickeSpec{c.m, c.n, c.occupations, c.sweep_l ? 1 : c.l}.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Output output(c, out);
    auto& os = output.stream();
    int code = 0;
    switch (c.command) {
      case Command::kEntropyEval: {
        const double v = evaluate(build_spec(c), load_distribution(c.dist)).value;
        emit_scalar(c, os, "entropy eval", {}, v);
        break;
      }
      case Command::kEntropySweep: code = run_entropy_sweep(c, os); break;
      case Command::kVerify: code = run_verify(c, os); break;
      case Command::kSeriesInvert: code = run_series_invert(c, os); break;
      case Command::kGrouplawExpand: code = run_grouplaw(c, os); break;
      case Command::kLogEval:
        emit_scalar(c, os, "log eval", {{"x", c.x}}, GroupLogarithm(build_group(c), c.gamma).log(c.x));
        break;
      case Command::kExpEval:
        emit_scalar(c, os, "exp eval", {{"x", c.x}}, GroupLogarithm(build_group(c), c.gamma).exp(c.x));
        break;
      case Command::kChiEval: emit_scalar(c, os, "chi eval", {{"x", c.x}, {"y", c.y}}, build_group(c).chi(c.x, c.y)); break;
      case Command::kExtensivitySolve: code = run_extensivity(c, os); break;
      case Command::kQentropyEval: code = run_qentropy(c, os); break;
      case Command::kLmgDemo: code = run_lmg(c, os); break;
    }
    output.flush();
    return code;
  } catch (const Error& e) {
    err << "gek: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "gek: " << e.what() << '\n';
    return 2;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const std::optional<std::string>& env_seed) {
  RunConfig config;
  try {
    config = parse_args(args, env_seed);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "gek: usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "gek: " << e.what() << '\n';
    return 2;
  }
  return run(config, out, err);
}

}  // namespace gek::cli
