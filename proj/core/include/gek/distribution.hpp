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
#include <span>
#include <vector>

namespace gek {

/// Finite discrete probability vector: p_i >= 0 and sum p_i = 1 within the
/// validation tolerance.
class Distribution {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  struct Options {
    double tolerance = kDefaultTolerance;
    /// Rescale to unit sum after validation (negative entries still rejected).
    bool renormalize = false;
  };

  /// Throws Error(kInput) when empty, when an entry is negative or not finite,
  /// or when |sum - 1| exceeds the tolerance.
  explicit Distribution(std::vector<double> p) : Distribution(std::move(p), Options{}) {}
  Distribution(std::vector<double> p, Options options);

  static Distribution uniform(std::size_t w);
  /// Point mass at `at` in a space of w outcomes.
  static Distribution delta(std::size_t w, std::size_t at = 0);

  [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return p_[i]; }
  [[nodiscard]] std::span<const double> probabilities() const noexcept { return p_; }

  /// Same distribution with one zero-probability outcome appended.
  [[nodiscard]] Distribution expanded() const;

 private:
  std::vector<double> p_;
};

/// Joint distribution of two independent systems, p_{ij} = p_i r_j in
/// row-major (i outer) order.
Distribution product_distribution(const Distribution& p, const Distribution& r);

/// lambda p + (1 - lambda) r for equally sized distributions.
Distribution mixture(const Distribution& p, const Distribution& r, double lambda);

}  // namespace gek
