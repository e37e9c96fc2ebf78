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
#include <string>
#include <variant>

#include "gek/distribution.hpp"
#include "gek/group_function.hpp"

namespace gek {

/// Entropy value in nats (k_B = 1). `concave_regime` is false for the
/// Z-families evaluated at alpha > 1, where only Schur concavity holds.
struct EntropyValue {
  double value = 0.0;
  bool concave_regime = true;
};

/// sum_i p_i^alpha with 0^alpha := 0. Throws kParameter unless alpha > 0.
double power_sum(const Distribution& p, double alpha);

/// sum_i p_i ln(1/p_i), 0 ln(1/0) := 0.
EntropyValue boltzmann(const Distribution& p);

/// ln(sum p_i^alpha)/(1 - alpha); the Z-entropy of the identity law.
EntropyValue renyi(double alpha, const Distribution& p);

/// ln_G(sum p_i^alpha)/(1 - alpha) with ln_G(x) = G(ln x). alpha == 1 is
/// rejected (kParameter); use boltzmann() for the limit.
EntropyValue z_entropy(const GroupFunction& g, double alpha, const Distribution& p);

/// (1 - sum p_i^{a(q-1)+1})/(q - 1); requires a > 0, q != 1, a(q-1)+1 > 0.
EntropyValue tsallis_aq(double a, double q, const Distribution& p);

/// S_q / sum p_i^q with S_q = tsallis_aq(1, q, p).
EntropyValue landsberg_vedral(double q, const Distribution& p);

/// ln_q(sum p_i^alpha)/(1 - alpha), ln_q(x) = (x^{1-q} - 1)/(1 - q).
/// Requires q > 0, alpha > 0, alpha != 1; alpha > 1 is flagged non-concave.
EntropyValue z_q_alpha(double q, double alpha, const Distribution& p);

/// [(sum p^alpha)^k - (sum p^alpha)^{-k}] / (2k(1 - alpha)), -1 < k < 1, k != 0.
EntropyValue z_k_alpha(double k, double alpha, const Distribution& p);

/// [(sum p^alpha)^a - (sum p^alpha)^b] / ((a - b)(1 - alpha)) with a != b and
/// a > 0 or b > 0.
EntropyValue z_ab(double a, double b, double alpha, const Distribution& p);

/// G(renyi(alpha, p)): G applied after the Renyi quotient.
EntropyValue alt_z_entropy(const GroupFunction& g, double alpha, const Distribution& p);

/// Phi(x, y) = chi((1 - alpha)x, (1 - alpha)y)/(1 - alpha), the composition
/// law of z_entropy(g, alpha, .).
double composition_phi(const GroupFunction& g, double alpha, double x, double y);

/// Family tag plus validated parameters. Selects both the functional and its
/// composition law Phi.
struct EntropySpec {
  struct Boltzmann {};
  struct Renyi {
    double alpha;
  };
  struct TsallisAQ {
    double a;
    double q;
  };
  struct LandsbergVedral {
    double q;
  };
  struct ZGAlpha {
    GroupFunction g;
    double alpha;
  };
  struct ZQAlpha {
    double q;
    double alpha;
  };
  struct ZKAlpha {
    double k;
    double alpha;
  };
  struct ZAB {
    double a;
    double b;
    double alpha;
  };
  struct AltNewZ {
    GroupFunction g;
    double alpha;
  };
  using Family = std::variant<Boltzmann, Renyi, TsallisAQ, LandsbergVedral, ZGAlpha, ZQAlpha, ZKAlpha, ZAB, AltNewZ>;

  Family family;

  /// Throws kParameter when the family's constraints are violated.
  void validate() const;

  /// Short machine name ("renyi", "zab", ...).
  [[nodiscard]] std::string family_name() const;
  /// Human readable name with parameters.
  [[nodiscard]] std::string describe() const;
  /// alpha for the families that have one.
  [[nodiscard]] std::optional<double> alpha() const;
  /// Group function G such that the entropy is z_entropy(G, alpha, .) (or, for
  /// AltNewZ, G(renyi)); empty for the trace-form families.
  [[nodiscard]] std::optional<GroupFunction> group() const;
  /// True for Renyi, ZGAlpha, ZQAlpha, ZKAlpha, ZAB and AltNewZ.
  [[nodiscard]] bool is_z_family() const;
};

/// S(p) for the selected family.
EntropyValue evaluate(const EntropySpec& spec, const Distribution& p);

/// Phi(x, y) with S(p x r) = Phi(S(p), S(r)); closed forms where the law is
/// known explicitly, chi-based otherwise.
double compose(const EntropySpec& spec, double x, double y);

/// S(uniform over W) from ln W alone, so that W may exceed double range.
double uniform_entropy_from_log_w(const EntropySpec& spec, double log_w);

}  // namespace gek
