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

#include "gek/growth_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gek/errors.hpp"

namespace gek::props {

double GrowthLaw::log_w(double n) const {
  if (const auto* p = std::get_if<PowerLaw>(&law)) return p->rho * std::log(n);
  if (const auto* e = std::get_if<Exponential>(&law)) return e->lambda * n;
  const auto& s = std::get<GroupSolved>(law);
  const double c = 1.0 - s.alpha;
  return s.g.inverse(c * s.lambda * n) / c;
}

GrowthSolution solve_growth_law(const EntropySpec& spec, double lambda, double horizon) {
  spec.validate();
  if (!(lambda > 0.0)) fail(ErrorKind::kParameter, "growth rate lambda must be positive");
  if (!(horizon >= 1.0)) fail(ErrorKind::kParameter, "horizon must be >= 1");

  GrowthSolution out{};
  if (std::holds_alternative<EntropySpec::Boltzmann>(spec.family)) {
    out.law.law = GrowthLaw::Exponential{lambda};
  } else if (const auto* alt = std::get_if<EntropySpec::AltNewZ>(&spec.family)) {
    out.law.law = GrowthLaw::GroupSolved{alt->g, 0.0, lambda};
  } else if (spec.is_z_family()) {
    out.law.law = GrowthLaw::GroupSolved{*spec.group(), *spec.alpha(), lambda};
  } else {
    fail(ErrorKind::kParameter, "no group-theoretic growth law for " + spec.family_name());
  }

  out.valid = true;
  double previous = 0.0;
  for (double n = 1.0; n <= horizon; n *= 2.0) {
    double lw = 0.0;
    try {
      lw = out.law.log_w(n);
    } catch (const Error&) {
      out.valid = false;
      out.restricted_from = n;
      break;
    }
    if (!std::isfinite(lw) || !(lw > previous)) {
      out.valid = false;
      out.restricted_from = n;
      break;
    }
    previous = lw;
  }
  return out;
}

double entropy_per_particle(const EntropySpec& spec, const GrowthLaw& law, double n, bool round_to_integer) {
  if (!(n > 0.0)) fail(ErrorKind::kDomain, "particle number must be positive");
  double lw = law.log_w(n);
  if (round_to_integer && lw < 53.0 * std::log(2.0)) lw = std::log(std::max(1.0, std::round(std::exp(lw))));
  return uniform_entropy_from_log_w(spec, lw) / n;
}

PropertyReport check_extensivity_roundtrip(const EntropySpec& spec, double lambda, std::span<const double> ns) {
  PropertyReport report{.property = "extensivity_roundtrip"};
  PropertyReport closed{.property = "closed_form"};
  PropertyReport integer{.property = "integer_w", .asserted = false};
  integer.note = "report-only: W rounded to an integer";
  const double horizon = ns.empty() ? 1.0 : *std::max_element(ns.begin(), ns.end());
  const auto solution = solve_growth_law(spec, lambda, horizon);
  if (!solution.valid) {
    report.asserted = false;
    report.note = solution.restricted_from
                      ? "restricted domain: W(N) undefined or not increasing from N = " +
                            std::to_string(static_cast<long long>(*solution.restricted_from))
                      : "growth law not valid on the sampled range";
  }
  for (double n : ns) {
    auto witness = [&] { return "N=" + std::to_string(static_cast<long long>(n)); };
    try {
      closed.record(std::abs(entropy_per_particle(spec, solution.law, n, false) - lambda) / lambda, 1e-9, witness);
      integer.record(std::abs(entropy_per_particle(spec, solution.law, n, true) - lambda) / lambda, 1e-9, witness);
    } catch (const Error&) {
      ++closed.skipped;
    }
  }
  report.add(std::move(closed));
  report.add(std::move(integer));
  return report;
}

double tsallis_qstar(double a, double rho) {
  if (!(a > 0.0) || !(rho > 0.0)) fail(ErrorKind::kParameter, "q* needs a > 0 and rho > 0");
  return 1.0 - 1.0 / (a * rho);
}

}  // namespace gek::props
