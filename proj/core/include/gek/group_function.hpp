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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gek/formal_series.hpp"

namespace gek {

/// Open interval (lo, hi) on which G is strictly increasing; infinities allowed.
struct Interval {
  double lo;
  double hi;

  [[nodiscard]] bool contains(double t) const { return t > lo && t < hi; }
};

/// A strictly increasing function G with G(0) = 0, G'(0) = 1. It fixes the
/// group logarithm ln_G(x) = G(ln x), the exponential exp_G(x) = e^{G^{-1}(x)}
/// and the composition law chi(x, y) = G(G^{-1}(x) + G^{-1}(y)).
class GroupFunction {
 public:
  struct Identity {};
  /// G(t) = (e^{(1-q)t} - 1)/(1 - q)
  struct Multiplicative {
    double q;
  };
  /// G(t) = sinh(k t)/k
  struct Kaniadakis {
    double k;
  };
  /// G(t) = (e^{at} - e^{bt})/(a - b)
  struct Abel {
    double a;
    double b;
  };
  /// G given by a truncated series, evaluated by Horner for |t| <= horizon.
  struct SeriesDefined {
    std::vector<double> coeffs;
    double horizon;
  };
  using Variant = std::variant<Identity, Multiplicative, Kaniadakis, Abel, SeriesDefined>;

  GroupFunction() = default;

  static GroupFunction identity();
  /// Throws kParameter when q == 1 exactly.
  static GroupFunction multiplicative(double q);
  /// Throws kParameter unless -1 < k < 1, k != 0.
  static GroupFunction kaniadakis(double k);
  /// Throws kParameter when a == b.
  static GroupFunction abel(double a, double b);
  /// Requires a normalized series (c_0 = 0, c_1 = 1) that is strictly
  /// increasing on [-horizon, horizon] (checked by sampling).
  static GroupFunction series_defined(const series::TruncatedSeries& g, double horizon);

  [[nodiscard]] const Variant& variant() const noexcept { return v_; }
  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool has_closed_form_inverse() const;

  /// G(t). Throws kDomain outside the series horizon.
  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] double derivative(double t) const;
  /// G^{-1}(s), |G(t) - s| <= 1e-12 max(1, |s|). Throws kRange outside the
  /// range of G on its monotone domain, kConvergence if bracketing fails.
  [[nodiscard]] double inverse(double s) const;
  /// chi(x, y) = G(G^{-1}(x) + G^{-1}(y)), closed form where one exists.
  [[nodiscard]] double chi(double x, double y) const;

  /// Interval around 0 on which G is strictly increasing (the inversion branch).
  [[nodiscard]] Interval monotone_domain() const;
  /// Image of monotone_domain() under G.
  [[nodiscard]] Interval range() const;

 private:
  explicit GroupFunction(Variant v) : v_(std::move(v)) {}

  [[nodiscard]] double numeric_inverse(double s) const;

  Variant v_ = Identity{};
};

/// ln_G(x) = G(ln x^gamma) together with its inverse.
class GroupLogarithm {
 public:
  explicit GroupLogarithm(GroupFunction g, double gamma = 1.0);

  [[nodiscard]] const GroupFunction& group() const noexcept { return g_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }

  /// Throws kDomain for x <= 0.
  [[nodiscard]] double log(double x) const;
  /// e^{G^{-1}(x)/gamma}; ln_G(exp_G(x)) == x.
  [[nodiscard]] double exp(double x) const;
  /// d/dx ln_G(x) = G'(gamma ln x) gamma / x.
  [[nodiscard]] double log_derivative(double x) const;

 private:
  GroupFunction g_;
  double gamma_;
};

/// a_k > (k+1) a_{k+1} and a_k > 0 for every provided k: a sufficient
/// condition for ln_G(x) = G(ln x) to be concave, with G = sum a_k t^{k+1}/(k+1).
bool check_concavity_condition(std::span<const double> a_seq);

/// Largest second central difference of ln_G over `points` log-spaced samples
/// in [lo, hi]; nonpositive means the samples found no convexity.
double max_second_difference(const GroupLogarithm& lg, double lo, double hi, int points);

}  // namespace gek
