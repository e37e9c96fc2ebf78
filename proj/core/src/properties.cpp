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

#include "gek/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "gek/errors.hpp"

namespace gek::props {
namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

std::string show(const Distribution& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += num(p[i]);
  }
  return s + "]";
}

double entropy_of(const EntropySpec& spec, const Distribution& p) { return evaluate(spec, p).value; }

// Power-sum interval reached by distributions on at most max_w outcomes.
std::pair<double, double> power_sum_range(double alpha, int max_w) {
  const double edge = std::pow(static_cast<double>(max_w), 1.0 - alpha);
  return alpha < 1.0 ? std::pair{1.0, edge} : std::pair{edge, 1.0};
}

bool log_increasing_on(const GroupFunction& g, double lo, double hi) {
  const GroupLogarithm lg(g);
  constexpr int kSamples = 200;
  for (int i = 0; i < kSamples; ++i) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (kSamples - 1));
    if (!(lg.log_derivative(x) > 0.0)) return false;
  }
  return true;
}

double draw_q(Rng& rng) {
  double q = 1.0;
  while (std::abs(q - 1.0) < 0.05) q = rng.uniform(0.2, 2.5);
  return q;
}

double draw_k(Rng& rng) {
  double k = 0.0;
  while (std::abs(k) < 0.05) k = rng.uniform(-0.9, 0.9);
  return k;
}

GroupFunction draw_group(Rng& rng) {
  switch (rng.integer(0, 2)) {
    case 0: return GroupFunction::multiplicative(draw_q(rng));
    case 1: return GroupFunction::kaniadakis(draw_k(rng));
    default: return GroupFunction::abel(rng.uniform(0.05, 0.95), -rng.uniform(0.0, 0.95));
  }
}

}  // namespace

Distribution random_distribution(std::size_t w, Rng& rng, double zero_probability) {
  if (w == 0) fail(ErrorKind::kInput, "random distribution needs W >= 1");
  std::vector<double> p(w);
  double sum = 0.0;
  for (auto& x : p) {
    x = (rng.uniform() < zero_probability) ? 0.0 : -std::log1p(-rng.uniform());
    sum += x;
  }
  if (!(sum > 0.0)) {
    p[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(w) - 1))] = 1.0;
    sum = 1.0;
  }
  for (auto& x : p) x /= sum;
  return Distribution(std::move(p), {1e-9, true});
}

Distribution random_interior_distribution(std::size_t w, Rng& rng, double floor) {
  if (!(static_cast<double>(w) * floor < 1.0)) fail(ErrorKind::kInput, "floor too large for W");
  const auto base = random_distribution(w, rng);
  std::vector<double> p(w);
  const double scale = 1.0 - static_cast<double>(w) * floor;
  for (std::size_t i = 0; i < w; ++i) p[i] = floor + scale * base[i];
  return Distribution(std::move(p), {1e-9, true});
}

void PropertyReport::record(double residual, double bound, const std::function<std::string()>& describe_witness) {
  ++trials;
  const bool bad = !(residual <= bound);
  if (bad) ++failures;
  const double shown = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
  if (trials == 1 || shown > worst_residual) {
    worst_residual = shown;
    witness = describe_witness();
  }
}

void PropertyReport::add(PropertyReport sub) {
  if (sub.asserted) {
    failures += sub.failures;
    trials += sub.trials;
    skipped += sub.skipped;
    if (sub.trials > 0 && (trials == sub.trials || sub.worst_residual > worst_residual)) {
      worst_residual = sub.worst_residual;
      witness = sub.property + ": " + sub.witness;
    }
  }
  sub_reports.push_back(std::move(sub));
}

Functional functional_of(const EntropySpec& spec) {
  spec.validate();
  return {spec.describe(), [spec](const Distribution& p) { return entropy_of(spec, p); },
          [spec](double x, double y) { return compose(spec, x, y); }};
}

Functional non_composable_control() {
  return {"control: sum p^2 ln(1/p) with additive law",
          [](const Distribution& p) {
            double s = 0.0;
            for (double pi : p.probabilities())
              if (pi > 0.0) s -= pi * pi * std::log(pi);
            return s;
          },
          [](double x, double y) { return x + y; }};
}

PropertyReport check_composability(const Functional& f, int trials, double tol, std::uint64_t seed, int max_w) {
  PropertyReport report{.property = "composability", .seed = seed};
  report.note = f.name;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto wa = static_cast<std::size_t>(rng.integer(1, max_w));
    const auto wb = static_cast<std::size_t>(rng.integer(1, max_w));
    const auto p = random_distribution(wa, rng, 0.15);
    const auto r = random_distribution(wb, rng, 0.15);
    try {
      const double joint = f.entropy(product_distribution(p, r));
      const double phi = f.phi(f.entropy(p), f.entropy(r));
      report.record(std::abs(joint - phi) / (1.0 + std::abs(joint)), tol,
                    [&] { return "p=" + show(p) + ";r=" + show(r); });
    } catch (const Error&) {
      ++report.skipped;
    }
  }
  return report;
}

PropertyReport check_composability(const EntropySpec& spec, int trials, double tol, std::uint64_t seed, int max_w) {
  return check_composability(functional_of(spec), trials, tol, seed, max_w);
}

PropertyReport check_composability_uniform(const EntropySpec& spec, int max_w, double tol) {
  PropertyReport report{.property = "composability_uniform", .asserted = false};
  report.note = "non-normative: uniform distributions only";
  for (int wa = 1; wa <= max_w; ++wa)
    for (int wb = 1; wb <= max_w; ++wb) {
      const auto p = Distribution::uniform(static_cast<std::size_t>(wa));
      const auto r = Distribution::uniform(static_cast<std::size_t>(wb));
      const double joint = entropy_of(spec, product_distribution(p, r));
      const double phi = compose(spec, entropy_of(spec, p), entropy_of(spec, r));
      report.record(std::abs(joint - phi) / (1.0 + std::abs(joint)), tol,
                    [&] { return "W_A=" + std::to_string(wa) + ";W_B=" + std::to_string(wb); });
    }
  return report;
}

PropertyReport check_group_axioms_numeric(const GroupFunction& g, double alpha, int trials, double tol,
                                          std::uint64_t seed) {
  PropertyReport report{.property = "group_axioms", .seed = seed};
  report.note = g.name();
  PropertyReport symmetry{.property = "symmetry", .seed = seed};
  PropertyReport associativity{.property = "associativity", .seed = seed};
  PropertyReport null_composability{.property = "null_composability", .seed = seed};
  Rng rng(seed);
  const Interval dom = g.monotone_domain();
  const double c = 1.0 - alpha;
  auto draw = [&] {
    const double lo = std::max(-0.5, std::isfinite(dom.lo) ? 0.5 * dom.lo : -0.5);
    const double hi = std::min(0.5, std::isfinite(dom.hi) ? 0.5 * dom.hi : 0.5);
    return g(rng.uniform(lo, hi)) / c;
  };
  auto phi = [&](double x, double y) { return composition_phi(g, alpha, x, y); };
  for (int t = 0; t < trials; ++t) {
    const double x = draw(), y = draw(), z = draw();
    auto witness = [&] { return "x=" + num(x) + ";y=" + num(y) + ";z=" + num(z); };
    try {
      const double xy = phi(x, y);
      symmetry.record(std::abs(xy - phi(y, x)) / (1.0 + std::abs(xy)), tol, witness);
      const double left = phi(xy, z);
      const double right = phi(x, phi(y, z));
      associativity.record(std::abs(left - right) / (1.0 + std::abs(left)), tol, witness);
      null_composability.record(std::abs(phi(x, 0.0) - x) / (1.0 + std::abs(x)), tol, witness);
    } catch (const Error&) {
      ++report.skipped;
    }
  }
  report.add(std::move(symmetry));
  report.add(std::move(associativity));
  report.add(std::move(null_composability));
  return report;
}

bool check_concavity_region_saq(double a, double q) {
  return (q < 1.0 && a > 0.0 && a < 1.0 / (1.0 - q)) || (q > 1.0 && a > 0.0);
}

bool concavity_hypothesis_holds(const EntropySpec& spec, int max_w) {
  if (std::holds_alternative<EntropySpec::Boltzmann>(spec.family)) return true;
  if (const auto* t = std::get_if<EntropySpec::TsallisAQ>(&spec.family)) return check_concavity_region_saq(t->a, t->q);
  if (std::holds_alternative<EntropySpec::LandsbergVedral>(spec.family)) return false;
  if (std::holds_alternative<EntropySpec::AltNewZ>(spec.family)) return false;
  const double alpha = *spec.alpha();
  if (!(alpha < 1.0)) return false;
  const auto [lo, hi] = power_sum_range(alpha, max_w);
  const GroupLogarithm lg(*spec.group());
  return log_increasing_on(lg.group(), lo, hi) && max_second_difference(lg, lo, hi, 200) <= 1e-9;
}

bool schur_hypothesis_holds(const EntropySpec& spec, int max_w) {
  if (!spec.is_z_family()) return true;
  const double alpha = *spec.alpha();
  const GroupFunction g = *spec.group();
  if (std::holds_alternative<EntropySpec::AltNewZ>(spec.family)) {
    // G applied to Renyi values in [0, ln max_w]
    const double top = std::log(static_cast<double>(max_w));
    for (int i = 0; i <= 200; ++i)
      if (!(g.derivative(top * i / 200.0) > 0.0)) return false;
    return true;
  }
  const auto [lo, hi] = power_sum_range(alpha, max_w);
  return log_increasing_on(g, lo, hi);
}

PropertyReport check_concavity(const EntropySpec& spec, int trials, std::uint64_t seed, double slack, int min_w,
                               int max_w) {
  PropertyReport report{.property = "concavity", .seed = seed};
  report.asserted = concavity_hypothesis_holds(spec);
  if (!report.asserted) report.note = "report-only: concavity is not claimed for these parameters";
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto w = static_cast<std::size_t>(rng.integer(min_w, max_w));
    const auto p1 = random_distribution(w, rng, 0.1);
    const auto p2 = random_distribution(w, rng, 0.1);
    const double lambda = rng.uniform();
    const double mixed = entropy_of(spec, mixture(p1, p2, lambda));
    const double chord = lambda * entropy_of(spec, p1) + (1.0 - lambda) * entropy_of(spec, p2);
    report.record(chord - mixed, slack,
                  [&] { return "p1=" + show(p1) + ";p2=" + show(p2) + ";lambda=" + num(lambda); });
  }
  return report;
}

PropertyReport check_sk_axioms(const EntropySpec& spec, int trials, std::uint64_t seed) {
  PropertyReport report{.property = "sk_axioms", .seed = seed};
  PropertyReport continuity{.property = "continuity_lipschitz_proxy", .seed = seed, .asserted = false};
  continuity.note = "report-only: worst_residual is the largest sampled |dS|/|dp|_1";
  PropertyReport maximum{.property = "maximum_on_uniform", .seed = seed};
  maximum.asserted = schur_hypothesis_holds(spec);
  PropertyReport expansibility{.property = "expansibility", .seed = seed};
  PropertyReport nonnegativity{.property = "nonnegativity", .seed = seed};
  Rng rng(seed);
  for (std::size_t w = 2; w <= 6; ++w) {
    const double s_uniform = entropy_of(spec, Distribution::uniform(w));
    for (int t = 0; t < trials; ++t) {
      const auto p = random_distribution(w, rng, 0.2);
      const double s = entropy_of(spec, p);
      maximum.record(s - s_uniform, 1e-12 * (1.0 + std::abs(s_uniform)),
                     [&] { return "p=" + show(p); });
      expansibility.record(std::abs(entropy_of(spec, p.expanded()) - s), 1e-14, [&] { return "p=" + show(p); });
      nonnegativity.record(-s, 1e-12, [&] { return "p=" + show(p); });

      const auto q = random_interior_distribution(w, rng, 1e-3);
      const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(w) - 1));
      auto j = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(w) - 2));
      if (j >= i) ++j;
      constexpr double kEta = 1e-7;
      std::vector<double> moved(q.probabilities().begin(), q.probabilities().end());
      moved[i] -= kEta;
      moved[j] += kEta;
      const double ratio = std::abs(entropy_of(spec, Distribution(moved)) - entropy_of(spec, q)) / (2.0 * kEta);
      continuity.record(ratio, std::numeric_limits<double>::max(), [&] { return "p=" + show(q); });
    }
  }
  report.add(std::move(continuity));
  report.add(std::move(maximum));
  report.add(std::move(expansibility));
  report.add(std::move(nonnegativity));
  report.add(check_concavity(spec, trials, seed ^ 0x9e3779b97f4a7c15ULL));
  return report;
}

bool is_majorized_by(const Distribution& p, const Distribution& r, double tol) {
  std::vector<double> a(r.probabilities().begin(), r.probabilities().end());
  std::vector<double> b(p.probabilities().begin(), p.probabilities().end());
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sa += a[k];
    sb += b[k];
    if (k + 1 < n && sa < sb - tol) return false;
  }
  return std::abs(sa - sb) <= std::max(tol, 1e-12);
}

MajorizationPair generate_majorization_pair(std::size_t w, int steps, Rng& rng) {
  if (w < 2) fail(ErrorKind::kInput, "majorization pair needs W >= 2");
  constexpr std::int64_t kMass = std::int64_t{1} << 20;
  std::vector<double> e(w);
  double total = 0.0;
  for (auto& x : e) total += (x = -std::log1p(-rng.uniform()));
  std::vector<std::int64_t> r(w);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < w; ++i) assigned += (r[i] = static_cast<std::int64_t>(e[i] / total * kMass));
  r[0] += kMass - assigned;

  auto m = r;
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(w) - 1));
    auto j = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(w) - 2));
    if (j >= i) ++j;
    if (m[i] < m[j]) std::swap(i, j);
    const std::int64_t gap = m[i] - m[j];
    if (gap < 2) continue;
    const std::int64_t moved = rng.integer(1, gap / 2);
    m[i] -= moved;
    m[j] += moved;
  }
  auto to_dist = [](const std::vector<std::int64_t>& v) {
    std::vector<double> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = static_cast<double>(v[i]) / static_cast<double>(kMass);
    return Distribution(std::move(p));
  };
  MajorizationPair pair{to_dist(m), to_dist(r)};
  if (!is_majorized_by(pair.p, pair.r)) fail(ErrorKind::kInput, "generated pair failed the dominance test");
  return pair;
}

PropertyReport check_schur_concavity(const EntropySpec& spec, int trials, std::uint64_t seed, int max_w) {
  PropertyReport report{.property = "schur_concavity", .seed = seed};
  PropertyReport ordering{.property = "majorization_ordering", .seed = seed};
  PropertyReport ostrowski{.property = "schur_ostrowski", .seed = seed};
  ordering.asserted = ostrowski.asserted = schur_hypothesis_holds(spec, max_w);
  if (!ordering.asserted) ordering.note = ostrowski.note = "report-only: ln_G is not increasing on the sampled range";
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto w = static_cast<std::size_t>(rng.integer(2, max_w));
    const auto pair = generate_majorization_pair(w, static_cast<int>(rng.integer(1, 3 * static_cast<std::int64_t>(w))), rng);
    const double sp = entropy_of(spec, pair.p);
    const double sr = entropy_of(spec, pair.r);
    const double su = entropy_of(spec, Distribution::uniform(w));
    const double sd = entropy_of(spec, Distribution::delta(w));
    const double residual = std::max({sr - sp, sp - su, sd - sr});
    ordering.record(residual, 1e-12, [&] { return "p=" + show(pair.p) + ";r=" + show(pair.r); });
  }
  for (int t = 0; t < trials; ++t) {
    const auto w = static_cast<std::size_t>(rng.integer(2, max_w));
    const auto p = random_interior_distribution(w, rng, 1e-3);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i + 1; j < w; ++j) {
        const double h = 1e-6 * std::max(p[i], 1e-3);
        std::vector<double> plus(p.probabilities().begin(), p.probabilities().end());
        std::vector<double> minus = plus;
        plus[i] += h;
        plus[j] -= h;
        minus[i] -= h;
        minus[j] += h;
        const double derivative =
            (entropy_of(spec, Distribution(std::move(plus))) - entropy_of(spec, Distribution(std::move(minus)))) /
            (2.0 * h);
        worst = std::max(worst, (p[i] - p[j]) * derivative);
      }
    ostrowski.record(worst, 1e-10, [&] { return "p=" + show(p); });
  }
  report.add(std::move(ordering));
  report.add(std::move(ostrowski));
  return report;
}

EntropySpec random_admissible_spec(FamilyTag family, AlphaRegime regime, Rng& rng) {
  const double alpha = regime == AlphaRegime::kConcave ? rng.uniform(0.1, 0.9) : rng.uniform(1.2, 3.5);
  return random_admissible_spec(family, alpha, rng);
}

EntropySpec random_admissible_spec(FamilyTag family, double alpha, Rng& rng) {
  EntropySpec spec;
  switch (family) {
    case FamilyTag::kRenyi: spec.family = EntropySpec::Renyi{alpha}; break;
    case FamilyTag::kTsallisAQ: {
      const double q = draw_q(rng);
      const double a_max = q < 1.0 ? std::min(3.0, 0.95 / (1.0 - q)) : 3.0;
      spec.family = EntropySpec::TsallisAQ{rng.uniform(0.1, a_max), q};
      break;
    }
    case FamilyTag::kLandsbergVedral: spec.family = EntropySpec::LandsbergVedral{draw_q(rng)}; break;
    case FamilyTag::kZG: spec.family = EntropySpec::ZGAlpha{draw_group(rng), alpha}; break;
    case FamilyTag::kZQ: spec.family = EntropySpec::ZQAlpha{draw_q(rng), alpha}; break;
    case FamilyTag::kZK: spec.family = EntropySpec::ZKAlpha{draw_k(rng), alpha}; break;
    case FamilyTag::kZAB: {
      double a = rng.uniform(0.05, 0.95);
      double b = -rng.uniform(0.0, 0.95);
      if (rng.uniform() < 0.5) std::swap(a, b);
      spec.family = EntropySpec::ZAB{a, b, alpha};
      break;
    }
    case FamilyTag::kAltZ: spec.family = EntropySpec::AltNewZ{draw_group(rng), alpha}; break;
  }
  spec.validate();
  return spec;
}

}  // namespace gek::props
