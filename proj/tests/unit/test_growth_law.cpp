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

#include <array>
#include <cmath>

#include "gek/errors.hpp"
#include "gek/growth_law.hpp"

namespace gek::props {
namespace {

TEST(GrowthLaw, BoltzmannIsExponential) {
  const auto sol = solve_growth_law({EntropySpec::Boltzmann{}}, 0.7);
  EXPECT_TRUE(sol.valid);
  EXPECT_TRUE(std::holds_alternative<GrowthLaw::Exponential>(sol.law.law));
  EXPECT_DOUBLE_EQ(sol.law.log_w(10.0), 7.0);
  EXPECT_NEAR(entropy_per_particle({EntropySpec::Boltzmann{}}, sol.law, 100.0, false), 0.7, 1e-14);
}

TEST(GrowthLaw, RenyiIsExponential) {
  const auto sol = solve_growth_law({EntropySpec::Renyi{0.4}}, 1.3);
  ASSERT_TRUE(sol.valid);
  EXPECT_NEAR(sol.law.log_w(20.0), 26.0, 1e-12);
}

TEST(GrowthLaw, MultiplicativeClosedForm) {
  // ln W = ln(1 + (1-q)(1-alpha) lambda N) / ((1-q)(1-alpha))
  const double q = 0.5, alpha = 0.3, lambda = 0.8;
  const auto sol = solve_growth_law({EntropySpec::ZQAlpha{q, alpha}}, lambda);
  ASSERT_TRUE(sol.valid);
  const double c = (1 - q) * (1 - alpha);
  for (double n : {1.0, 10.0, 1000.0, 1e6}) EXPECT_NEAR(sol.law.log_w(n), std::log1p(c * lambda * n) / c, 1e-12 * n);
}

TEST(GrowthLaw, RoundTripsToLambda) {
  const std::array<double, 5> ns{1.0, 10.0, 100.0, 1e4, 1e6};
  for (const EntropySpec& spec :
       {EntropySpec{EntropySpec::ZQAlpha{0.5, 0.3}}, EntropySpec{EntropySpec::ZKAlpha{0.5, 0.5}},
        EntropySpec{EntropySpec::ZAB{0.6, -0.2, 0.4}}, EntropySpec{EntropySpec::ZGAlpha{GroupFunction::abel(2, 1), 0.5}},
        EntropySpec{EntropySpec::AltNewZ{GroupFunction::multiplicative(0.7), 0.5}}}) {
    const auto r = check_extensivity_roundtrip(spec, 0.9, ns);
    EXPECT_TRUE(r.passed()) << spec.describe() << " " << r.witness;
    ASSERT_EQ(r.sub_reports.size(), 2u);
    EXPECT_TRUE(r.sub_reports[0].asserted);
    EXPECT_FALSE(r.sub_reports[1].asserted);
  }
}

TEST(GrowthLaw, RangeLimitedGroupIsRestricted) {
  // q > 1 bounds G from above, so G^{-1}(c lambda N) stops existing
  const auto sol = solve_growth_law({EntropySpec::ZQAlpha{1.5, 0.5}}, 1.0);
  EXPECT_FALSE(sol.valid);
  ASSERT_TRUE(sol.restricted_from.has_value());
  EXPECT_GE(*sol.restricted_from, 4.0);
}

TEST(GrowthLaw, UnsupportedFamiliesAndParameters) {
  EXPECT_THROW((void)solve_growth_law({EntropySpec::TsallisAQ{1.0, 0.5}}, 1.0), Error);
  EXPECT_THROW((void)solve_growth_law({EntropySpec::Boltzmann{}}, 0.0), Error);
  EXPECT_THROW((void)solve_growth_law({EntropySpec::Boltzmann{}}, 1.0, 0.5), Error);
}

TEST(Tsallis, PowerLawIsExtensiveAtQStar) {
  for (double a : {0.5, 1.0, 2.0})
    for (double rho : {1.5, 2.0, 4.0}) {
      const double q = tsallis_qstar(a, rho);
      EXPECT_DOUBLE_EQ(q, 1.0 - 1.0 / (a * rho));
      const EntropySpec spec{EntropySpec::TsallisAQ{a, q}};
      const GrowthLaw law{GrowthLaw::PowerLaw{rho}};
      for (double n : {10.0, 100.0, 1000.0}) {
        const double s = entropy_per_particle(spec, law, n, false);
        EXPECT_NEAR(s, a * rho * (1.0 - 1.0 / n), 1e-10 * a * rho) << a << " " << rho << " " << n;
      }
    }
}

TEST(Tsallis, OtherIndicesAreNotExtensive) {
  const double a = 1.0, rho = 2.0;
  const GrowthLaw law{GrowthLaw::PowerLaw{rho}};
  const EntropySpec off{EntropySpec::TsallisAQ{a, tsallis_qstar(a, rho) + 0.1}};
  const double s1 = entropy_per_particle(off, law, 1e2, false);
  const double s2 = entropy_per_particle(off, law, 1e4, false);
  EXPECT_GT(std::abs(s2 - s1), 0.1 * s1);
}

}  // namespace
}  // namespace gek::props
