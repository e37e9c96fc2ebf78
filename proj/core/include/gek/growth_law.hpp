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

#pragma once

#include <optional>
#include <span>
#include <variant>

#include "gek/entropy.hpp"
#include "gek/group_function.hpp"
#include "gek/properties.hpp"

namespace gek::props {

/// Phase-space growth W(N), carried in log form so that W may exceed the
/// double range.
struct GrowthLaw {
  /// W(N) = N^rho
  struct PowerLaw {
    double rho;
  };
  /// W(N) = e^{lambda N}
  struct Exponential {
    double lambda;
  };
  /// W(N) = [exp_G((1 - alpha) lambda N)]^{1/(1 - alpha)}
  struct GroupSolved {
    GroupFunction g;
    double alpha;
    double lambda;
  };
  std::variant<PowerLaw, Exponential, GroupSolved> law;

  /// ln W(N). Throws kRange where exp_G is undefined.
  [[nodiscard]] double log_w(double n) const;
};

struct GrowthSolution {
  GrowthLaw law;
  /// Sampled on N = 1, 2, 4, ... up to the horizon: real, increasing, > 1.
  bool valid = false;
  /// First sampled N at which W(N) stopped being defined, if any.
  std::optional<double> restricted_from;
};

/// Solves Z(uniform over W(N)) = lambda N for W. Boltzmann yields the
/// exponential law; the Z-families yield GroupSolved. Other families throw
/// kParameter.
GrowthSolution solve_growth_law(const EntropySpec& spec, double lambda, double horizon = 1e6);

/// S(uniform over W(N))/N. With `round_to_integer`, W is rounded to the
/// nearest integer >= 1 while it is exactly representable.
double entropy_per_particle(const EntropySpec& spec, const GrowthLaw& law, double n, bool round_to_integer = true);

/// |S(uniform over W(N))/N - lambda| <= 1e-9 lambda at each sampled N, with W
/// from solve_growth_law (sub-report "closed_form"). The same residual with W
/// rounded to an integer is the report-only sub-report "integer_w". The whole
/// check is report-only when the law is restricted.
PropertyReport check_extensivity_roundtrip(const EntropySpec& spec, double lambda, std::span<const double> ns);

/// q* = 1 - 1/(a rho), the index that makes S_{a,q} extensive for W = N^rho.
double tsallis_qstar(double a, double rho);

}  // namespace gek::props
