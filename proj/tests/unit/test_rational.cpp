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

#include "gek/errors.hpp"
#include "gek/rational.hpp"

namespace gek {
namespace {

TEST(ParseRational, Integers) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-12"), Rational(-12));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
  EXPECT_EQ(parse_rational("010"), Rational(10));
}

TEST(ParseRational, Fractions) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("0.5/2"), Rational(1, 4));
}

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2."), Rational(2));
  EXPECT_EQ(parse_rational("-1.075"), Rational(-43, 40));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
}

TEST(ParseRational, Malformed) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e", "--1", ".", "1/x", "0x10", "1e9999999"}) {
    try {
      (void)parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInput) << bad;
    }
  }
}

TEST(FractionString, Canonical) {
  EXPECT_EQ(to_fraction_string(parse_rational("-2/4")), "-1/2");
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
}

TEST(ErrorType, MessageCarriesKind) {
  const Error e(ErrorKind::kRange, "outside");
  EXPECT_EQ(e.kind(), ErrorKind::kRange);
  EXPECT_STREQ(e.what(), "range error: outside");
  EXPECT_EQ(to_string(ErrorKind::kNonInvertible), "non-invertible-normalization");
}

}  // namespace
}  // namespace gek
