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

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "gek/errors.hpp"
#include "gek/quantum.hpp"

namespace gek::quantum {
namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void enumerate(const std::vector<int>& k, std::size_t j, int remaining, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
  if (j + 1 == k.size()) {
    if (remaining <= k[j]) {
      current[j] = remaining;
      out.push_back(current);
    }
    return;
  }
  for (int l = 0; l <= std::min(k[j], remaining); ++l) {
    current[j] = l;
    enumerate(k, j + 1, remaining - l, current, out);
  }
}

}  // namespace

int dicke_max_sites(int m) {
  if (m < 1) fail(ErrorKind::kInput, "m must be >= 1");
  if (m == 1) return 14;
  if (m == 2) return 10;
  const double budget = 10.0 * std::log(3.0);
  return static_cast<int>(std::floor(budget / std::log(m + 1.0) + 1e-12));
}

void DickeSpec::validate() const {
  if (m < 1) fail(ErrorKind::kInput, "m must be >= 1");
  if (occupations.size() != static_cast<std::size_t>(m) + 1)
    fail(ErrorKind::kInput, "expected " + std::to_string(m + 1) + " occupations, got " +
                                std::to_string(occupations.size()));
  for (int k : occupations)
    if (k < 0) fail(ErrorKind::kInput, "occupations must be non-negative");
  if (std::accumulate(occupations.begin(), occupations.end(), 0) != n)
    fail(ErrorKind::kInput, "occupations must sum to N = " + std::to_string(n));
  if (n < 2 || n > dicke_max_sites(m))
    fail(ErrorKind::kInput, "N = " + std::to_string(n) + " outside [2, " + std::to_string(dicke_max_sites(m)) +
                                "] for m = " + std::to_string(m));
  if (l < 1 || l > n - 1) fail(ErrorKind::kInput, "block size L must lie in [1, N-1]");
}

std::vector<BlockOccupation> dicke_block_spectrum(const DickeSpec& spec) {
  spec.validate();
  std::vector<std::vector<int>> blocks;
  std::vector<int> current(spec.occupations.size(), 0);
  enumerate(spec.occupations, 0, spec.l, current, blocks);
  const mpz_class total = binomial(spec.n, spec.l);
  std::vector<BlockOccupation> out;
  out.reserve(blocks.size());
  for (auto& counts : blocks) {
    mpz_class numerator = 1;
    for (std::size_t j = 0; j < counts.size(); ++j) numerator *= binomial(spec.occupations[j], counts[j]);
    const mpq_class w(numerator, total);
    out.push_back({std::move(counts), w.get_d()});
  }
  return out;
}

DensityMatrix dicke_reduced_density(const DickeSpec& spec) {
  const auto blocks = dicke_block_spectrum(spec);
  std::vector<double> weights;
  weights.reserve(blocks.size());
  for (const auto& b : blocks) weights.push_back(b.weight);
  return DensityMatrix::diagonal(weights);
}

double lmg_exact_za0(const DickeSpec& spec, double a, double alpha) {
  if (a == 0.0) fail(ErrorKind::kParameter, "a must be nonzero");
  if (alpha == 1.0) fail(ErrorKind::kParameter, "alpha = 1 is excluded");
  if (!(alpha >= 0.0)) fail(ErrorKind::kParameter, "alpha must be >= 0");
  double trace = 0.0;
  for (const auto& b : dicke_block_spectrum(spec))
    if (b.weight > DensityMatrix::kClamp) trace += alpha == 0.0 ? 1.0 : std::pow(b.weight, alpha);
  return (std::pow(trace, a) - 1.0) / (a * (1.0 - alpha));
}

void LmgParams::validate() const {
  if (m < 1) fail(ErrorKind::kParameter, "m must be >= 1");
  if (!std::isfinite(a)) fail(ErrorKind::kParameter, "a must be finite");
  if (densities.size() != static_cast<std::size_t>(m) + 1)
    fail(ErrorKind::kParameter, "expected " + std::to_string(m + 1) + " densities");
  double sum = 0.0;
  for (double n : densities) {
    if (!(n >= 0.0)) fail(ErrorKind::kParameter, "densities must be non-negative");
    sum += n;
  }
  if (std::abs(sum - 1.0) > 1e-12) fail(ErrorKind::kParameter, "densities must sum to 1");
  if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorKind::kParameter, "block ratio gamma must lie in (0, 1)");
}

double lmg_asymptotic_za0(const LmgParams& params, int l) {
  params.validate();
  if (params.a == 0.0) fail(ErrorKind::kParameter, "a must be nonzero");
  if (params.alpha == 1.0) fail(ErrorKind::kParameter, "alpha = 1 is excluded");
  if (!(params.alpha > 0.0)) fail(ErrorKind::kDomain, "alpha^(-ma/2) is undefined for alpha <= 0");
  if (l < 1) fail(ErrorKind::kInput, "L must be positive");
  const double m = params.m;
  const double e = params.a * m * (1.0 - params.alpha) / 2.0;
  double product = 1.0;
  for (double n : params.densities) product *= std::pow(n, 1.0 / m);
  const double base = 2.0 * std::numbers::pi * (1.0 - params.gamma) * product;
  const double prefactor = params.a * (1.0 - params.alpha) * std::pow(params.alpha, m * params.a / 2.0);
  return std::pow(static_cast<double>(l), e) / prefactor * std::pow(base, e);
}

double extensive_alpha(double a, int m) {
  if (a * m == 0.0) fail(ErrorKind::kParameter, "a m must be nonzero");
  return 1.0 - 2.0 / (a * m);
}

}  // namespace gek::quantum
