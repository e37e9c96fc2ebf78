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

#include "gek/entropy.hpp"

#include <cmath>
#include <sstream>

#include "gek/errors.hpp"

namespace gek {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Below this |1 - q| the q-logarithm is evaluated as ln.
constexpr double kQLimit = 1e-9;

std::string num(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorKind::kParameter, "alpha must be positive, got " + num(alpha));
  if (alpha == 1.0) fail(ErrorKind::kParameter, "alpha = 1 is the Boltzmann limit; use boltzmann()");
}

void require_tsallis_aq(double a, double q) {
  if (!(a > 0.0)) fail(ErrorKind::kParameter, "tsallis_aq needs a > 0");
  if (q == 1.0 || !std::isfinite(q)) fail(ErrorKind::kParameter, "tsallis_aq needs q != 1");
  if (!(a * (q - 1.0) + 1.0 > 0.0)) fail(ErrorKind::kParameter, "tsallis_aq needs a(q-1)+1 > 0");
}

void require_lv(double q) {
  if (q == 1.0 || !(q > 0.0) || !std::isfinite(q)) fail(ErrorKind::kParameter, "landsberg_vedral needs q > 0, q != 1");
}

void require_zq(double q, double alpha) {
  require_alpha(alpha);
  if (!(q > 0.0) || !std::isfinite(q)) fail(ErrorKind::kParameter, "z_q_alpha needs q > 0");
}

void require_zk(double k, double alpha) {
  require_alpha(alpha);
  if (k == 0.0) fail(ErrorKind::kParameter, "z_k_alpha with k = 0 is the Renyi entropy; use renyi()");
  if (!(k > -1.0 && k < 1.0)) fail(ErrorKind::kParameter, "z_k_alpha needs -1 < k < 1");
}

void require_zab(double a, double b, double alpha) {
  require_alpha(alpha);
  if (!std::isfinite(a) || !std::isfinite(b)) fail(ErrorKind::kParameter, "z_ab needs finite a, b");
  if (a == b) fail(ErrorKind::kParameter, "z_ab needs a != b");
  if (!(a > 0.0 || b > 0.0)) fail(ErrorKind::kParameter, "z_ab needs a > 0 or b > 0");
}

bool concave_regime(double alpha) { return alpha < 1.0; }

}  // namespace

double power_sum(const Distribution& p, double alpha) {
  if (!(alpha > 0.0)) fail(ErrorKind::kParameter, "power_sum needs alpha > 0");
  double s = 0.0;
  for (double pi : p.probabilities())
    if (pi > 0.0) s += std::pow(pi, alpha);
  return s;
}

EntropyValue boltzmann(const Distribution& p) {
  double s = 0.0;
  for (double pi : p.probabilities())
    if (pi > 0.0) s -= pi * std::log(pi);
  return {s, true};
}

EntropyValue renyi(double alpha, const Distribution& p) { return z_entropy(GroupFunction::identity(), alpha, p); }

EntropyValue z_entropy(const GroupFunction& g, double alpha, const Distribution& p) {
  require_alpha(alpha);
  return {g(std::log(power_sum(p, alpha))) / (1.0 - alpha), concave_regime(alpha)};
}

EntropyValue tsallis_aq(double a, double q, const Distribution& p) {
  require_tsallis_aq(a, q);
  // 1 - sum p^{q'} = sum p (1 - p^{q'-1}), summed term by term to avoid
  // cancellation as q -> 1.
  const double shift = a * (q - 1.0);
  double s = 0.0;
  for (double pi : p.probabilities())
    if (pi > 0.0) s -= pi * std::expm1(shift * std::log(pi));
  return {s / (q - 1.0), true};
}

EntropyValue landsberg_vedral(double q, const Distribution& p) {
  require_lv(q);
  return {tsallis_aq(1.0, q, p).value / power_sum(p, q), true};
}

EntropyValue z_q_alpha(double q, double alpha, const Distribution& p) {
  require_zq(q, alpha);
  const double x = power_sum(p, alpha);
  const double ln_q = std::abs(1.0 - q) < kQLimit ? std::log(x) : (std::pow(x, 1.0 - q) - 1.0) / (1.0 - q);
  return {ln_q / (1.0 - alpha), concave_regime(alpha)};
}

EntropyValue z_k_alpha(double k, double alpha, const Distribution& p) {
  require_zk(k, alpha);
  const double x = power_sum(p, alpha);
  return {(std::pow(x, k) - std::pow(x, -k)) / (2.0 * k * (1.0 - alpha)), concave_regime(alpha)};
}

EntropyValue z_ab(double a, double b, double alpha, const Distribution& p) {
  require_zab(a, b, alpha);
  const double x = power_sum(p, alpha);
  return {(std::pow(x, a) - std::pow(x, b)) / ((a - b) * (1.0 - alpha)), concave_regime(alpha)};
}

EntropyValue alt_z_entropy(const GroupFunction& g, double alpha, const Distribution& p) {
  require_alpha(alpha);
  return {g(renyi(alpha, p).value), concave_regime(alpha)};
}

double composition_phi(const GroupFunction& g, double alpha, double x, double y) {
  require_alpha(alpha);
  const double c = 1.0 - alpha;
  return g.chi(c * x, c * y) / c;
}

void EntropySpec::validate() const {
  std::visit(Overloaded{
                 [](const Boltzmann&) {},
                 [](const Renyi& r) { require_alpha(r.alpha); },
                 [](const TsallisAQ& t) { require_tsallis_aq(t.a, t.q); },
                 [](const LandsbergVedral& l) { require_lv(l.q); },
                 [](const ZGAlpha& z) { require_alpha(z.alpha); },
                 [](const ZQAlpha& z) { require_zq(z.q, z.alpha); },
                 [](const ZKAlpha& z) { require_zk(z.k, z.alpha); },
                 [](const ZAB& z) { require_zab(z.a, z.b, z.alpha); },
                 [](const AltNewZ& z) { require_alpha(z.alpha); },
             },
             family);
}

std::string EntropySpec::family_name() const {
  return std::visit(Overloaded{
                        [](const Boltzmann&) { return "boltzmann"; },
                        [](const Renyi&) { return "renyi"; },
                        [](const TsallisAQ&) { return "tsallis_aq"; },
                        [](const LandsbergVedral&) { return "landsberg_vedral"; },
                        [](const ZGAlpha&) { return "zg"; },
                        [](const ZQAlpha&) { return "zq"; },
                        [](const ZKAlpha&) { return "zk"; },
                        [](const ZAB&) { return "zab"; },
                        [](const AltNewZ&) { return "zg_alt"; },
                    },
                    family);
}

std::string EntropySpec::describe() const {
  return std::visit(Overloaded{
                        [](const Boltzmann&) { return std::string("boltzmann"); },
                        [](const Renyi& r) { return "renyi(alpha=" + num(r.alpha) + ")"; },
                        [](const TsallisAQ& t) { return "tsallis_aq(a=" + num(t.a) + ",q=" + num(t.q) + ")"; },
                        [](const LandsbergVedral& l) { return "landsberg_vedral(q=" + num(l.q) + ")"; },
                        [](const ZGAlpha& z) { return "zg(" + z.g.name() + ",alpha=" + num(z.alpha) + ")"; },
                        [](const ZQAlpha& z) { return "zq(q=" + num(z.q) + ",alpha=" + num(z.alpha) + ")"; },
                        [](const ZKAlpha& z) { return "zk(k=" + num(z.k) + ",alpha=" + num(z.alpha) + ")"; },
                        [](const ZAB& z) {
                          return "zab(a=" + num(z.a) + ",b=" + num(z.b) + ",alpha=" + num(z.alpha) + ")";
                        },
                        [](const AltNewZ& z) { return "zg_alt(" + z.g.name() + ",alpha=" + num(z.alpha) + ")"; },
                    },
                    family);
}

std::optional<double> EntropySpec::alpha() const {
  return std::visit(Overloaded{
                        [](const Boltzmann&) -> std::optional<double> { return std::nullopt; },
                        [](const TsallisAQ&) -> std::optional<double> { return std::nullopt; },
                        [](const LandsbergVedral&) -> std::optional<double> { return std::nullopt; },
                        [](const auto& z) -> std::optional<double> { return z.alpha; },
                    },
                    family);
}

std::optional<GroupFunction> EntropySpec::group() const {
  return std::visit(Overloaded{
                        [](const Renyi&) -> std::optional<GroupFunction> { return GroupFunction::identity(); },
                        [](const ZGAlpha& z) -> std::optional<GroupFunction> { return z.g; },
                        [](const ZQAlpha& z) -> std::optional<GroupFunction> {
                          if (z.q == 1.0) return GroupFunction::identity();
                          return GroupFunction::multiplicative(z.q);
                        },
                        [](const ZKAlpha& z) -> std::optional<GroupFunction> { return GroupFunction::kaniadakis(z.k); },
                        [](const ZAB& z) -> std::optional<GroupFunction> { return GroupFunction::abel(z.a, z.b); },
                        [](const AltNewZ& z) -> std::optional<GroupFunction> { return z.g; },
                        [](const auto&) -> std::optional<GroupFunction> { return std::nullopt; },
                    },
                    family);
}

bool EntropySpec::is_z_family() const {
  return !(std::holds_alternative<Boltzmann>(family) || std::holds_alternative<TsallisAQ>(family) ||
           std::holds_alternative<LandsbergVedral>(family));
}

EntropyValue evaluate(const EntropySpec& spec, const Distribution& p) {
  return std::visit(Overloaded{
                        [&](const EntropySpec::Boltzmann&) { return boltzmann(p); },
                        [&](const EntropySpec::Renyi& r) { return renyi(r.alpha, p); },
                        [&](const EntropySpec::TsallisAQ& t) { return tsallis_aq(t.a, t.q, p); },
                        [&](const EntropySpec::LandsbergVedral& l) { return landsberg_vedral(l.q, p); },
                        [&](const EntropySpec::ZGAlpha& z) { return z_entropy(z.g, z.alpha, p); },
                        [&](const EntropySpec::ZQAlpha& z) { return z_q_alpha(z.q, z.alpha, p); },
                        [&](const EntropySpec::ZKAlpha& z) { return z_k_alpha(z.k, z.alpha, p); },
                        [&](const EntropySpec::ZAB& z) { return z_ab(z.a, z.b, z.alpha, p); },
                        [&](const EntropySpec::AltNewZ& z) { return alt_z_entropy(z.g, z.alpha, p); },
                    },
                    spec.family);
}

double compose(const EntropySpec& spec, double x, double y) {
  return std::visit(
      Overloaded{
          [&](const EntropySpec::Boltzmann&) { return x + y; },
          [&](const EntropySpec::Renyi&) { return x + y; },
          [&](const EntropySpec::TsallisAQ& t) { return x + y + (1.0 - t.q) * x * y; },
          [&](const EntropySpec::LandsbergVedral& l) { return x + y + (l.q - 1.0) * x * y; },
          [&](const EntropySpec::ZGAlpha& z) { return composition_phi(z.g, z.alpha, x, y); },
          [&](const EntropySpec::ZQAlpha& z) { return x + y + (1.0 - z.alpha) * (1.0 - z.q) * x * y; },
          [&](const EntropySpec::ZKAlpha& z) {
            const double c = z.k * z.k * (1.0 - z.alpha) * (1.0 - z.alpha);
            return x * std::sqrt(1.0 + c * y * y) + y * std::sqrt(1.0 + c * x * x);
          },
          [&](const EntropySpec::ZAB& z) { return composition_phi(GroupFunction::abel(z.a, z.b), z.alpha, x, y); },
          [&](const EntropySpec::AltNewZ& z) { return z.g.chi(x, y); },
      },
      spec.family);
}

double uniform_entropy_from_log_w(const EntropySpec& spec, double log_w) {
  spec.validate();
  if (!(log_w >= 0.0)) fail(ErrorKind::kInput, "ln W must be nonnegative");
  return std::visit(
      Overloaded{
          [&](const EntropySpec::Boltzmann&) { return log_w; },
          [&](const EntropySpec::Renyi&) { return log_w; },
          [&](const EntropySpec::TsallisAQ& t) {
            const double qp = t.a * (t.q - 1.0) + 1.0;
            return -std::expm1((1.0 - qp) * log_w) / (t.q - 1.0);
          },
          [&](const EntropySpec::LandsbergVedral& l) {
            const double s_q = -std::expm1((1.0 - l.q) * log_w) / (l.q - 1.0);
            return s_q / std::exp((1.0 - l.q) * log_w);
          },
          [&](const EntropySpec::ZGAlpha& z) { return z.g((1.0 - z.alpha) * log_w) / (1.0 - z.alpha); },
          [&](const EntropySpec::ZQAlpha& z) {
            const double c = (1.0 - z.q) * (1.0 - z.alpha);
            if (std::abs(1.0 - z.q) < kQLimit) return log_w;
            return std::expm1(c * log_w) / c;
          },
          [&](const EntropySpec::ZKAlpha& z) {
            const double c = z.k * (1.0 - z.alpha);
            return std::sinh(c * log_w) / c;
          },
          [&](const EntropySpec::ZAB& z) {
            return GroupFunction::abel(z.a, z.b)((1.0 - z.alpha) * log_w) / (1.0 - z.alpha);
          },
          [&](const EntropySpec::AltNewZ& z) { return z.g(log_w); },
      },
      spec.family);
}

}  // namespace gek
