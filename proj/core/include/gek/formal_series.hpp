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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gek/rational.hpp"

namespace gek::series {

/// Univariate formal power series c_0 + c_1 s + ... + c_n s^n with exact
/// rational coefficients, truncated at order n. Binary operations truncate to
/// the smaller order of their operands.
class TruncatedSeries {
 public:
  /// Builds from c_0..c_n; the order is coeffs.size() - 1. Throws on empty input.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(int order);
  /// The series s, truncated at `order` (order >= 1).
  static TruncatedSeries identity(int order);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] TruncatedSeries truncated(int order) const;
  /// Coefficients converted to double, for fast evaluation.
  [[nodiscard]] std::vector<double> to_double() const;

  /// c_0 == 0 and c_1 == 1, the normalization required for reversion.
  [[nodiscard]] bool is_normalized() const;

  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f);
  friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// F(s) = sum_{i < order} b_i s^{i+1} / (i+1). Missing b_i are zero.
/// Throws kInvalidNormalization unless b_0 == 1.
TruncatedSeries series_from_b_sequence(std::span<const Rational> b, int order);

/// Reads the normalized coefficient sequence back out: a_k = (k+1) c_{k+1},
/// the inverse of series_from_b_sequence. Result has order() entries.
std::vector<Rational> b_sequence_of(const TruncatedSeries& f);

/// f(g(s)). Requires g_0 == 0 (kCompositionDomain otherwise).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse via Lagrange inversion:
///   [s^n] g = (1/n) [t^{n-1}] (t / f(t))^n.
/// Requires c_0 = 0, c_1 = 1 (kNonInvertible otherwise).
TruncatedSeries reversion(const TruncatedSeries& f);

/// Series of (e^{(1-q)t} - 1)/(1 - q); reduces to t when q == 1.
TruncatedSeries multiplicative_exponential_series(const Rational& q, int order);
/// Series of sinh(k t)/k; reduces to t when k == 0.
TruncatedSeries sinh_series(const Rational& k, int order);
/// Series of (e^{at} - e^{bt})/(a - b), written as sum_{i+j=n-1} a^i b^j t^n/n!
/// so that a == b is the continuous extension t e^{at}.
TruncatedSeries abel_exponential_series(const Rational& a, const Rational& b, int order);

/// Two-variable series sum c_{ij} x^i y^j over i + j <= order.
class BivariateTruncatedSeries {
 public:
  explicit BivariateTruncatedSeries(int order);

  /// f(x) (or f(y) when in_y) viewed as a bivariate series.
  static BivariateTruncatedSeries from_univariate(const TruncatedSeries& f, bool in_y = false);

  [[nodiscard]] int order() const noexcept { return order_; }
  /// Coefficient of x^i y^j; zero for i + j > order.
  [[nodiscard]] Rational coeff(int i, int j) const;
  void set(int i, int j, Rational value);

  /// Nonzero coefficients in (total degree, then descending i) order.
  [[nodiscard]] std::vector<std::pair<std::pair<int, int>, Rational>> nonzero_terms() const;

  friend BivariateTruncatedSeries operator+(const BivariateTruncatedSeries& f, const BivariateTruncatedSeries& g);
  friend BivariateTruncatedSeries operator*(const BivariateTruncatedSeries& f, const BivariateTruncatedSeries& g);
  friend bool operator==(const BivariateTruncatedSeries& f, const BivariateTruncatedSeries& g);

 private:
  [[nodiscard]] std::size_t index(int i, int j) const;

  int order_;
  std::vector<Rational> coeffs_;  // dense (order+1)^2 grid; cells with i+j > order stay zero
};

/// f(B(x, y)) for univariate f and bivariate B with zero constant term.
BivariateTruncatedSeries compose(const TruncatedSeries& f, const BivariateTruncatedSeries& inner);

/// Psi(x, y) = G(G^{-1}(x) + G^{-1}(y)) truncated at total degree `order`.
BivariateTruncatedSeries group_law_from_G(const TruncatedSeries& g, int order);

struct AxiomCheck {
  bool holds = true;
  /// First coefficient (i, j) or, for associativity, (i, j, k) that failed.
  std::vector<int> first_failure;
};

struct AxiomReport {
  AxiomCheck identity;
  AxiomCheck commutativity;
  AxiomCheck associativity;

  [[nodiscard]] bool all_hold() const { return identity.holds && commutativity.holds && associativity.holds; }
};

/// Exact coefficient-wise check of Psi(x,0) = Psi(0,x) = x, Psi(x,y) = Psi(y,x)
/// and Psi(Psi(x,y),z) = Psi(x,Psi(y,z)), the last one on trivariate
/// expansions truncated at total degree psi.order().
AxiomReport verify_group_axioms(const BivariateTruncatedSeries& psi);

/// Coefficients of the Abel formal group law
///   x + y + beta_1 xy + sum_{n>1} beta_n (x y^n + x^n y).
struct AbelCoefficients {
  Rational a;
  Rational b;
  std::vector<Rational> betas;  // betas[0] is beta_1
};

/// beta_1 = a + b; beta_n = (-1)^{n-1} / (n! (n-1)) * prod_{i+j=n-1} (i a + j b).
AbelCoefficients abel_group_coefficients(const Rational& a, const Rational& b, int n);

}  // namespace gek::series
