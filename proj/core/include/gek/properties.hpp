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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gek/distribution.hpp"
#include "gek/entropy.hpp"
#include "gek/group_function.hpp"

namespace gek::props {

/// Seeded generator with platform-independent real and integer draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Flat-Dirichlet draw on W outcomes; each coordinate is zeroed with
/// probability `zero_probability` (at least one stays positive).
Distribution random_distribution(std::size_t w, Rng& rng, double zero_probability = 0.0);
/// Random distribution with every p_i >= floor (requires W * floor < 1).
Distribution random_interior_distribution(std::size_t w, Rng& rng, double floor);

/// Outcome of one randomized or deterministic property check.
struct PropertyReport {
  std::string property;
  std::uint64_t seed = 0;
  int trials = 0;
  int failures = 0;
  int skipped = 0;
  double worst_residual = 0.0;
  /// Inputs that produced worst_residual.
  std::string witness{};
  /// Report-only checks never count as failures of their parent.
  bool asserted = true;
  std::string note{};
  std::vector<PropertyReport> sub_reports{};

  [[nodiscard]] bool passed() const { return failures == 0; }
  /// Records a residual; counts a failure when residual > bound.
  void record(double residual, double bound, const std::function<std::string()>& describe_witness);
  /// Adds a sub-report and folds its failures in if it is asserted.
  void add(PropertyReport sub);
};

/// An entropy functional paired with the composition law it claims.
struct Functional {
  std::string name;
  std::function<double(const Distribution&)> entropy;
  std::function<double(double, double)> phi;
};

Functional functional_of(const EntropySpec& spec);

/// sum_i p_i^2 ln(1/p_i) paired with the additive law: not composable, used to
/// confirm that check_composability can fail.
Functional non_composable_control();

/// |S(p x r) - Phi(S(p), S(r))| <= tol (1 + |S(p x r)|) for random
/// W_A, W_B in [1, max_w] and random distributions (some with zero entries).
PropertyReport check_composability(const Functional& f, int trials, double tol, std::uint64_t seed, int max_w = 8);
PropertyReport check_composability(const EntropySpec& spec, int trials, double tol, std::uint64_t seed, int max_w = 8);

/// Composability restricted to uniform distributions (weak composability
/// proxy); non-normative.
PropertyReport check_composability_uniform(const EntropySpec& spec, int max_w, double tol);

/// Phi symmetry, associativity and null-composability on random triples drawn
/// through G so that every argument is in range. Range errors are skipped.
PropertyReport check_group_axioms_numeric(const GroupFunction& g, double alpha, int trials, double tol,
                                          std::uint64_t seed);

/// Whether the concavity (alpha < 1) or monotonicity (alpha > 1) hypothesis on
/// ln_G holds over the power-sum range reached by W <= max_w, by sampling.
bool concavity_hypothesis_holds(const EntropySpec& spec, int max_w = 8);
bool schur_hypothesis_holds(const EntropySpec& spec, int max_w = 8);

/// S(lambda p1 + (1-lambda) p2) >= lambda S(p1) + (1-lambda) S(p2) - slack.
PropertyReport check_concavity(const EntropySpec& spec, int trials, std::uint64_t seed, double slack = 1e-12,
                               int min_w = 2, int max_w = 6);

/// Continuity (Lipschitz proxy, report-only), maximum on the uniform
/// distribution, expansibility, nonnegativity and concavity, each as a
/// sub-report.
/// `trials` distributions are drawn per W in [2, 6].
PropertyReport check_sk_axioms(const EntropySpec& spec, int trials, std::uint64_t seed);

struct MajorizationPair {
  Distribution p;  // the majorized (more even) vector
  Distribution r;  // the majorizing vector
};

/// p is majorized by r: decreasing partial sums of r dominate those of p.
bool is_majorized_by(const Distribution& p, const Distribution& r, double tol = 0.0);

/// Draws r on a dyadic grid (masses k / 2^20, exact in double) and applies
/// `steps` Robin-Hood transfers to obtain p with p majorized by r.
MajorizationPair generate_majorization_pair(std::size_t w, int steps, Rng& rng);

/// (i) S(p) >= S(r) - 1e-12 for generated pairs p majorized by r;
/// (ii) (p_i - p_j)(dS/dp_i - dS/dp_j) <= 1e-10 at interior points, with
/// central differences along e_i - e_j.
PropertyReport check_schur_concavity(const EntropySpec& spec, int trials, std::uint64_t seed, int max_w = 8);

/// (q < 1 and 0 < a < 1/(1-q)) or (q > 1 and a > 0).
bool check_concavity_region_saq(double a, double q);

/// Family-level random admissible parameters, used by the sweeping checks.
enum class FamilyTag { kRenyi, kTsallisAQ, kLandsbergVedral, kZG, kZQ, kZK, kZAB, kAltZ };
enum class AlphaRegime { kConcave, kSchur };

/// Parameters drawn inside the region where the family's structural properties are expected to hold
/// (ln_G concave for alpha in (0,1), increasing for alpha > 1).
EntropySpec random_admissible_spec(FamilyTag family, AlphaRegime regime, Rng& rng);
/// As above but alpha fixed.
EntropySpec random_admissible_spec(FamilyTag family, double alpha, Rng& rng);

}  // namespace gek::props
