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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "gek/distribution.hpp"
#include "gek/entropy.hpp"
#include "gek/errors.hpp"

namespace gek {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::kInput;
}

Distribution random_dist(std::mt19937_64& rng, std::size_t w, bool with_zeros = true) {
  std::exponential_distribution<double> e(1.0);
  std::bernoulli_distribution zero(0.15);
  std::vector<double> p(w);
  double s = 0.0;
  for (auto& x : p) s += (x = (with_zeros && zero(rng)) ? 0.0 : e(rng));
  if (s == 0.0) {
    p[0] = 1.0;
    s = 1.0;
  }
  for (auto& x : p) x /= s;
  return Distribution(p, {1e-9, true});
}

double sum_pow(const Distribution& p, double a) {
  double s = 0.0;
  for (double x : p.probabilities())
    if (x > 0.0) s += std::pow(x, a);
  return s;
}

const Distribution kDelta = Distribution::delta(5, 2);

TEST(DistributionType, Validation) {
  EXPECT_EQ(kind_of([] { Distribution({0.5, 0.6}); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { Distribution({1.2, -0.2}); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { Distribution(std::vector<double>{}); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { Distribution({0.5, NAN}); }), ErrorKind::kInput);
  const Distribution r({0.5, 0.5 + 1e-6}, {1e-5, true});
  EXPECT_NEAR(r[0] + r[1], 1.0, 4e-16);
  EXPECT_EQ(kind_of([] { Distribution({2.0, 2.0}, {1e-5, true}); }), ErrorKind::kInput);
  EXPECT_NO_THROW(Distribution({0.5, 0.5 + 5e-13}));
}

TEST(DistributionType, ProductAndExpansion) {
  const auto pr = product_distribution(Distribution({0.5, 0.5}), Distribution({1.0 / 3.0, 2.0 / 3.0}));
  ASSERT_EQ(pr.size(), 4u);
  EXPECT_NEAR(pr[0], 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(pr[1], 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(pr[2], 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(pr[3], 1.0 / 3.0, 1e-16);
  const auto u6 = product_distribution(Distribution::uniform(2), Distribution::uniform(3));
  for (double x : u6.probabilities()) EXPECT_NEAR(x, 1.0 / 6.0, 1e-16);
  const auto dp = product_distribution(Distribution::delta(1), Distribution({0.2, 0.8}));
  EXPECT_EQ(dp.size(), 2u);
  EXPECT_EQ(dp[1], 0.8);
  const auto e = Distribution({0.25, 0.75}).expanded();
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(e[2], 0.0);
}

TEST(PowerSum, Examples) {
  EXPECT_NEAR(power_sum(Distribution::uniform(4), 2.0), 0.25, 1e-16);
  for (double a : {0.3, 1.0, 2.5}) EXPECT_EQ(power_sum(kDelta, a), 1.0);
  EXPECT_NEAR(power_sum(Distribution({0.5, 1.0 / 3.0, 1.0 / 6.0}), 2.0), 14.0 / 36.0, 1e-16);
  EXPECT_EQ(kind_of([] { (void)power_sum(Distribution::uniform(2), 0.0); }), ErrorKind::kParameter);
}

TEST(Boltzmann, Examples) {
  EXPECT_NEAR(boltzmann(Distribution::uniform(2)).value, std::numbers::ln2, 1e-16);
  EXPECT_EQ(boltzmann(kDelta).value, 0.0);
  EXPECT_NEAR(boltzmann(Distribution({0.5, 0.25, 0.25})).value, 1.5 * std::numbers::ln2, 1e-15);
}

TEST(ZEntropy, IdentityIsRenyi) {
  for (std::size_t w : {2u, 5u, 17u})
    for (double a : {0.2, 0.5, 3.0}) EXPECT_NEAR(z_entropy(GroupFunction::identity(), a, Distribution::uniform(w)).value, std::log(w), 1e-14);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_dist(rng, 6);
    EXPECT_EQ(z_entropy(GroupFunction::identity(), 0.7, p).value, renyi(0.7, p).value);
  }
}

TEST(ZEntropy, DeltaIsZeroForEveryGroup) {
  for (const auto& g : {GroupFunction::identity(), GroupFunction::multiplicative(0.4), GroupFunction::kaniadakis(0.3),
                        GroupFunction::abel(0.5, -0.1)})
    for (double a : {0.3, 2.0}) EXPECT_EQ(z_entropy(g, a, kDelta).value, 0.0) << g.name();
}

TEST(ZEntropy, AlphaOneIsRejected) {
  EXPECT_EQ(kind_of([] { (void)z_entropy(GroupFunction::identity(), 1.0, Distribution::uniform(2)); }),
            ErrorKind::kParameter);
  EXPECT_EQ(kind_of([] { (void)renyi(1.0, Distribution::uniform(2)); }), ErrorKind::kParameter);
}

TEST(ZEntropy, RegimeFlag) {
  EXPECT_TRUE(renyi(0.5, Distribution::uniform(3)).concave_regime);
  EXPECT_FALSE(renyi(2.0, Distribution::uniform(3)).concave_regime);
}

TEST(ZEntropy, MultiplicativeMatchesZqAlpha) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> uq(0.1, 3.0), ua(0.1, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double q = uq(rng), a = ua(rng);
    const auto p = random_dist(rng, 1 + i % 8);
    const double z = z_entropy(GroupFunction::multiplicative(q), a, p).value;
    EXPECT_LE(std::abs(z - z_q_alpha(q, a, p).value), 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST(TsallisAQ, LimitsAndScaling) {
  std::mt19937_64 rng(3);
  const auto p = random_dist(rng, 7);
  for (double q : {1.0 - 1e-7, 1.0 + 1e-7}) EXPECT_NEAR(tsallis_aq(1.0, q, p).value, boltzmann(p).value, 1e-5);
  EXPECT_EQ(tsallis_aq(2.0, 0.7, kDelta).value, 0.0);
  std::uniform_real_distribution<double> ua(0.1, 3.0), uq(0.2, 2.5);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), q = uq(rng);
    const double qp = a * (q - 1.0) + 1.0;
    if (std::abs(q - 1.0) < 1e-3 || qp <= 0.0 || std::abs(qp - 1.0) < 1e-3) continue;
    const auto r = random_dist(rng, 1 + i % 8);
    const double direct = (1.0 - sum_pow(r, qp)) / (q - 1.0);
    const double scaled = a * tsallis_aq(1.0, qp, r).value;
    const double s = tsallis_aq(a, q, r).value;
    EXPECT_LE(std::abs(s - scaled), 1e-12 * std::max(1.0, s));
    EXPECT_LE(std::abs(s - direct), 1e-12 * std::max(1.0, s));
  }
}

TEST(TsallisAQ, ParameterErrors) {
  const auto u = Distribution::uniform(3);
  EXPECT_EQ(kind_of([&] { (void)tsallis_aq(1.0, 1.0, u); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([&] { (void)tsallis_aq(0.0, 0.5, u); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([&] { (void)tsallis_aq(3.0, 0.5, u); }), ErrorKind::kParameter);
}

TEST(LandsbergVedral, ExamplesAndComposition) {
  EXPECT_EQ(landsberg_vedral(0.5, kDelta).value, 0.0);
  for (std::size_t w : {2u, 3u, 10u}) EXPECT_NEAR(landsberg_vedral(2.0, Distribution::uniform(w)).value, w - 1.0, 1e-12);
  EXPECT_EQ(kind_of([] { (void)landsberg_vedral(1.0, Distribution::uniform(2)); }), ErrorKind::kParameter);
  std::mt19937_64 rng(4);
  for (double q : {0.4, 1.7})
    for (int i = 0; i < 200; ++i) {
      const auto a = random_dist(rng, 1 + i % 5), b = random_dist(rng, 1 + i % 7);
      const double sa = landsberg_vedral(q, a).value, sb = landsberg_vedral(q, b).value;
      const double sab = landsberg_vedral(q, product_distribution(a, b)).value;
      EXPECT_LE(std::abs(sab - (sa + sb + (q - 1.0) * sa * sb)), 1e-10 * (1.0 + std::abs(sab)));
    }
}

TEST(ZqAlpha, LimitsAndComposition) {
  std::mt19937_64 rng(5);
  const auto p = random_dist(rng, 6);
  for (double q : {1.0 - 1e-7, 1.0 + 1e-7}) EXPECT_NEAR(z_q_alpha(q, 0.6, p).value, renyi(0.6, p).value, 1e-5);
  EXPECT_EQ(z_q_alpha(0.3, 0.6, kDelta).value, 0.0);
  for (auto [q, a] : {std::pair{0.5, 0.3}, {2.0, 0.7}, {1.4, 2.5}})
    for (int i = 0; i < 200; ++i) {
      const auto x = random_dist(rng, 1 + i % 6), y = random_dist(rng, 1 + i % 5);
      const double sx = z_q_alpha(q, a, x).value, sy = z_q_alpha(q, a, y).value;
      const double sxy = z_q_alpha(q, a, product_distribution(x, y)).value;
      EXPECT_LE(std::abs(sxy - (sx + sy + (1.0 - a) * (1.0 - q) * sx * sy)), 1e-10 * (1.0 + std::abs(sxy)));
    }
}

TEST(ZkAlpha, LimitsAndComposition) {
  std::mt19937_64 rng(6);
  const auto p = random_dist(rng, 6);
  EXPECT_NEAR(z_k_alpha(1e-7, 0.4, p).value, renyi(0.4, p).value, 1e-5);
  EXPECT_EQ(z_k_alpha(0.5, 0.4, kDelta).value, 0.0);
  EXPECT_EQ(kind_of([&] { (void)z_k_alpha(0.0, 0.4, p); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([&] { (void)z_k_alpha(1.0, 0.4, p); }), ErrorKind::kParameter);
  for (auto [k, a] : {std::pair{0.3, 0.5}, {-0.7, 0.2}})
    for (int i = 0; i < 200; ++i) {
      const auto x = random_dist(rng, 1 + i % 6), y = random_dist(rng, 1 + i % 5);
      const double sx = z_k_alpha(k, a, x).value, sy = z_k_alpha(k, a, y).value;
      const double c = k * (1.0 - a);
      const double law = sx * std::sqrt(1.0 + c * c * sy * sy) + sy * std::sqrt(1.0 + c * c * sx * sx);
      const double sxy = z_k_alpha(k, a, product_distribution(x, y)).value;
      EXPECT_LE(std::abs(sxy - law), 1e-10 * (1.0 + std::abs(sxy)));
    }
}

TEST(ZAB, LimitsAndKaniadakisSpecialCase) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_dist(rng, 2 + i % 6);
    const double a = 0.35;
    EXPECT_NEAR(z_ab(1e-7, -1e-7, a, p).value, renyi(a, p).value, 1e-5);
    EXPECT_NEAR(z_ab(1.0, 1e-9, a, p).value, (1.0 - sum_pow(p, a)) / (a - 1.0), 1e-5);
    for (double k : {0.3, 0.8}) {
      const double zab = z_ab(k, -k, a, p).value;
      EXPECT_NEAR(zab, z_k_alpha(k, a, p).value, 1e-14);
    }
  }
  EXPECT_EQ(kind_of([] { (void)z_ab(0.5, 0.5, 0.5, Distribution::uniform(2)); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([] { (void)z_ab(-0.5, -0.2, 0.5, Distribution::uniform(2)); }), ErrorKind::kParameter);
}

TEST(AltZ, Examples) {
  std::mt19937_64 rng(8);
  const auto p = random_dist(rng, 5);
  EXPECT_EQ(alt_z_entropy(GroupFunction::identity(), 0.3, p).value, renyi(0.3, p).value);
  EXPECT_EQ(alt_z_entropy(GroupFunction::multiplicative(0.5), 0.3, kDelta).value, 0.0);
  const Distribution half({0.5, 0.5});
  const auto g = GroupFunction::multiplicative(0.5);
  EXPECT_NEAR(z_entropy(g, 0.5, half).value, 4.0 * (std::pow(2.0, 0.25) - 1.0), 1e-14);
  EXPECT_NEAR(alt_z_entropy(g, 0.5, half).value, 2.0 * (std::sqrt(2.0) - 1.0), 1e-14);
}

TEST(CompositionPhi, Examples) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    EXPECT_NEAR(composition_phi(GroupFunction::kaniadakis(0.4), 0.3, x, 0.0), x, 1e-12);
    EXPECT_NEAR(composition_phi(GroupFunction::abel(0.3, -0.2), 0.6, x, 0.0), x, 1e-12);
    EXPECT_NEAR(composition_phi(GroupFunction::identity(), 0.3, x, y), x + y, 1e-14 * (1 + x + y));
    const double q = 0.6, a = 0.25;
    EXPECT_NEAR(composition_phi(GroupFunction::multiplicative(q), a, x, y), x + y + (1 - a) * (1 - q) * x * y,
                1e-13 * (1 + x + y + x * y));
  }
}

TEST(EntropySpecType, DispatchMatchesDirectFunctions) {
  std::mt19937_64 rng(10);
  const auto p = random_dist(rng, 6);
  const auto g = GroupFunction::kaniadakis(0.25);
  EXPECT_EQ(evaluate({EntropySpec::Boltzmann{}}, p).value, boltzmann(p).value);
  EXPECT_EQ(evaluate({EntropySpec::Renyi{0.4}}, p).value, renyi(0.4, p).value);
  EXPECT_EQ(evaluate({EntropySpec::TsallisAQ{1.5, 0.8}}, p).value, tsallis_aq(1.5, 0.8, p).value);
  EXPECT_EQ(evaluate({EntropySpec::LandsbergVedral{0.8}}, p).value, landsberg_vedral(0.8, p).value);
  EXPECT_EQ(evaluate({EntropySpec::ZGAlpha{g, 0.4}}, p).value, z_entropy(g, 0.4, p).value);
  EXPECT_EQ(evaluate({EntropySpec::ZQAlpha{0.5, 0.4}}, p).value, z_q_alpha(0.5, 0.4, p).value);
  EXPECT_EQ(evaluate({EntropySpec::ZKAlpha{0.5, 0.4}}, p).value, z_k_alpha(0.5, 0.4, p).value);
  EXPECT_EQ(evaluate({EntropySpec::ZAB{0.5, -0.1, 0.4}}, p).value, z_ab(0.5, -0.1, 0.4, p).value);
  EXPECT_EQ(evaluate({EntropySpec::AltNewZ{g, 0.4}}, p).value, alt_z_entropy(g, 0.4, p).value);
}

std::vector<EntropySpec> sample_specs() {
  return {{EntropySpec::Boltzmann{}},
          {EntropySpec::Renyi{0.4}},
          {EntropySpec::Renyi{2.5}},
          {EntropySpec::TsallisAQ{1.5, 0.8}},
          {EntropySpec::LandsbergVedral{1.3}},
          {EntropySpec::ZGAlpha{GroupFunction::abel(0.4, -0.3), 0.6}},
          {EntropySpec::ZQAlpha{0.5, 0.4}},
          {EntropySpec::ZKAlpha{-0.5, 0.4}},
          {EntropySpec::ZAB{0.5, -0.1, 0.4}},
          {EntropySpec::AltNewZ{GroupFunction::multiplicative(0.6), 0.4}}};
}

TEST(EntropySpecType, UniformClosedFormMatchesEvaluation) {
  for (const auto& spec : sample_specs())
    for (std::size_t w : {1u, 2u, 7u, 40u}) {
      const double direct = evaluate(spec, Distribution::uniform(w)).value;
      EXPECT_NEAR(uniform_entropy_from_log_w(spec, std::log(w)), direct, 1e-12 * std::max(1.0, direct))
          << spec.describe() << " W=" << w;
    }
}

TEST(EntropySpecType, ComposeIsStrictOnProducts) {
  std::mt19937_64 rng(11);
  for (const auto& spec : sample_specs())
    for (int i = 0; i < 100; ++i) {
      const auto a = random_dist(rng, 1 + i % 6), b = random_dist(rng, 1 + i % 4);
      const double sab = evaluate(spec, product_distribution(a, b)).value;
      const double phi = compose(spec, evaluate(spec, a).value, evaluate(spec, b).value);
      EXPECT_LE(std::abs(sab - phi), 1e-10 * (1 + std::abs(sab))) << spec.describe();
    }
}

TEST(EntropySpecType, NonNegativeOnRandomDistributions) {
  std::mt19937_64 rng(12);
  for (const auto& spec : sample_specs())
    for (int i = 0; i < 200; ++i) EXPECT_GE(evaluate(spec, random_dist(rng, 1 + i % 9)).value, -1e-12) << spec.describe();
}

TEST(EntropySpecType, ValidationRejectsBadParameters) {
  EXPECT_EQ(kind_of([] { EntropySpec{EntropySpec::Renyi{1.0}}.validate(); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([] { EntropySpec{EntropySpec::Renyi{-0.5}}.validate(); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([] { EntropySpec{EntropySpec::ZKAlpha{1.5, 0.5}}.validate(); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([] { EntropySpec{EntropySpec::ZAB{0.2, 0.2, 0.5}}.validate(); }), ErrorKind::kParameter);
  EXPECT_EQ(kind_of([] { EntropySpec{EntropySpec::TsallisAQ{3.0, 0.5}}.validate(); }), ErrorKind::kParameter);
}

}  // namespace
}  // namespace gek
