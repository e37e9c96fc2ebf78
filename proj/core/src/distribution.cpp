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

#include "gek/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gek/errors.hpp"

namespace gek {

Distribution::Distribution(std::vector<double> p, Options options) : p_(std::move(p)) {
  if (p_.empty()) fail(ErrorKind::kInput, "distribution needs at least one outcome");
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0.0)
      fail(ErrorKind::kInput, "probability p_" + std::to_string(i) + " is negative or not finite");
    sum += p_[i];
  }
  if (!(std::abs(sum - 1.0) <= options.tolerance))
    fail(ErrorKind::kInput, "probabilities sum to " + std::to_string(sum) + ", not 1");
  if (options.renormalize)
    for (auto& x : p_) x /= sum;
}

Distribution Distribution::uniform(std::size_t w) {
  if (w == 0) fail(ErrorKind::kInput, "uniform distribution needs W >= 1");
  return Distribution(std::vector<double>(w, 1.0 / static_cast<double>(w)), Options{1e-9, false});
}

Distribution Distribution::delta(std::size_t w, std::size_t at) {
  if (at >= w) fail(ErrorKind::kInput, "delta position outside the outcome space");
  std::vector<double> p(w, 0.0);
  p[at] = 1.0;
  return Distribution(std::move(p));
}

Distribution Distribution::expanded() const {
  auto p = p_;
  p.push_back(0.0);
  return Distribution(std::move(p), Options{1.0, false});
}

Distribution product_distribution(const Distribution& p, const Distribution& r) {
  std::vector<double> joint;
  joint.reserve(p.size() * r.size());
  for (double pi : p.probabilities())
    for (double rj : r.probabilities()) joint.push_back(pi * rj);
  return Distribution(std::move(joint));
}

Distribution mixture(const Distribution& p, const Distribution& r, double lambda) {
  if (p.size() != r.size()) fail(ErrorKind::kInput, "mixture needs equally sized distributions");
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(ErrorKind::kInput, "mixture weight outside [0, 1]");
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = lambda * p[i] + (1.0 - lambda) * r[i];
  return Distribution(std::move(m));
}

}  // namespace gek
