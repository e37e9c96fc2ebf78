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

#include "gek/group_function.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gek/errors.hpp"

namespace gek {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this |1 - q| the multiplicative G is replaced by its limit G(t) = t.
constexpr double kMultiplicativeLimit = 1e-9;
constexpr double kRootTolerance = 1e-13;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double horner_derivative(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * t + static_cast<double>(k) * c[k];
  return acc;
}

double abel_value(double a, double b, double t) {
  const double d = a - b;
  if (d * t <= 0.0) return std::exp(b * t) * std::expm1(d * t) / d;
  return -std::exp(a * t) * std::expm1(-d * t) / d;
}

// lim G(t) for t -> -inf (side < 0) or +inf (side > 0), for Abel laws whose
// monotone domain is unbounded on that side.
double abel_limit(double a, double b, int side) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (side < 0) {
    if (lo < 0.0) return -kInf;
    return -1.0 / hi;  // lo == 0
  }
  if (hi > 0.0) return kInf;
  return -1.0 / lo;  // hi == 0
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool near_identity(const GroupFunction::Multiplicative& m) { return std::abs(1.0 - m.q) < kMultiplicativeLimit; }

}  // namespace

GroupFunction GroupFunction::identity() { return GroupFunction(Identity{}); }

GroupFunction GroupFunction::multiplicative(double q) {
  if (!std::isfinite(q) || q == 1.0) fail(ErrorKind::kParameter, "multiplicative G needs q != 1");
  return GroupFunction(Multiplicative{q});
}

GroupFunction GroupFunction::kaniadakis(double k) {
  if (!(k > -1.0 && k < 1.0) || k == 0.0) fail(ErrorKind::kParameter, "Kaniadakis G needs -1 < k < 1, k != 0");
  return GroupFunction(Kaniadakis{k});
}

GroupFunction GroupFunction::abel(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a == b) fail(ErrorKind::kParameter, "Abel G needs a != b");
  return GroupFunction(Abel{a, b});
}

GroupFunction GroupFunction::series_defined(const series::TruncatedSeries& g, double horizon) {
  if (!g.is_normalized()) fail(ErrorKind::kNonInvertible, "series-defined G needs c_0 = 0, c_1 = 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) fail(ErrorKind::kParameter, "series horizon must be positive");
  SeriesDefined s{g.to_double(), horizon};
  constexpr int kSamples = 401;
  for (int i = 0; i < kSamples; ++i) {
    const double t = -horizon + 2.0 * horizon * i / (kSamples - 1);
    if (!(horner_derivative(s.coeffs, t) > 0.0))
      fail(ErrorKind::kParameter, "series G is not increasing at t = " + fmt(t) + "; shrink the horizon");
  }
  return GroupFunction(std::move(s));
}

std::string GroupFunction::name() const {
  return std::visit(Overloaded{
                        [](const Identity&) { return std::string("identity"); },
                        [](const Multiplicative& m) { return "multiplicative(q=" + fmt(m.q) + ")"; },
                        [](const Kaniadakis& k) { return "kaniadakis(k=" + fmt(k.k) + ")"; },
                        [](const Abel& a) { return "abel(a=" + fmt(a.a) + ",b=" + fmt(a.b) + ")"; },
                        [](const SeriesDefined& s) {
                          return "series(order=" + std::to_string(s.coeffs.size() - 1) + ")";
                        },
                    },
                    v_);
}

bool GroupFunction::has_closed_form_inverse() const {
  return std::holds_alternative<Identity>(v_) || std::holds_alternative<Multiplicative>(v_) ||
         std::holds_alternative<Kaniadakis>(v_);
}

double GroupFunction::operator()(double t) const {
  return std::visit(Overloaded{
                        [t](const Identity&) { return t; },
                        [t](const Multiplicative& m) {
                          if (near_identity(m)) return t;
                          const double c = 1.0 - m.q;
                          return std::expm1(c * t) / c;
                        },
                        [t](const Kaniadakis& k) { return std::sinh(k.k * t) / k.k; },
                        [t](const Abel& a) { return abel_value(a.a, a.b, t); },
                        [t](const SeriesDefined& s) {
                          if (!(std::abs(t) <= s.horizon))
                            fail(ErrorKind::kDomain, "t = " + fmt(t) + " is beyond the series horizon");
                          return horner(s.coeffs, t);
                        },
                    },
                    v_);
}

double GroupFunction::derivative(double t) const {
  return std::visit(Overloaded{
                        [](const Identity&) { return 1.0; },
                        [t](const Multiplicative& m) {
                          if (near_identity(m)) return 1.0;
                          return std::exp((1.0 - m.q) * t);
                        },
                        [t](const Kaniadakis& k) { return std::cosh(k.k * t); },
                        [t](const Abel& a) {
                          return (a.a * std::exp(a.a * t) - a.b * std::exp(a.b * t)) / (a.a - a.b);
                        },
                        [t](const SeriesDefined& s) {
                          if (!(std::abs(t) <= s.horizon))
                            fail(ErrorKind::kDomain, "t = " + fmt(t) + " is beyond the series horizon");
                          return horner_derivative(s.coeffs, t);
                        },
                    },
                    v_);
}

Interval GroupFunction::monotone_domain() const {
  return std::visit(Overloaded{
                        [](const Abel& a) {
                          if (a.a * a.b > 0.0) {
                            // G'(t) = 0 where e^{(a-b)t} = b/a
                            const double t_crit = std::log(a.b / a.a) / (a.a - a.b);
                            return t_crit < 0.0 ? Interval{t_crit, kInf} : Interval{-kInf, t_crit};
                          }
                          return Interval{-kInf, kInf};
                        },
                        [](const SeriesDefined& s) { return Interval{-s.horizon, s.horizon}; },
                        [](const auto&) { return Interval{-kInf, kInf}; },
                    },
                    v_);
}

Interval GroupFunction::range() const {
  return std::visit(Overloaded{
                        [](const Identity&) { return Interval{-kInf, kInf}; },
                        [](const Multiplicative& m) {
                          if (near_identity(m)) return Interval{-kInf, kInf};
                          const double c = 1.0 - m.q;
                          return c > 0.0 ? Interval{-1.0 / c, kInf} : Interval{-kInf, -1.0 / c};
                        },
                        [](const Kaniadakis&) { return Interval{-kInf, kInf}; },
                        [this](const Abel& a) {
                          const Interval d = monotone_domain();
                          const double lo = std::isfinite(d.lo) ? abel_value(a.a, a.b, d.lo) : abel_limit(a.a, a.b, -1);
                          const double hi = std::isfinite(d.hi) ? abel_value(a.a, a.b, d.hi) : abel_limit(a.a, a.b, +1);
                          return Interval{lo, hi};
                        },
                        [](const SeriesDefined& s) {
                          // closed horizon: widen by one ulp so the endpoints count as inside
                          return Interval{std::nextafter(horner(s.coeffs, -s.horizon), -kInf),
                                          std::nextafter(horner(s.coeffs, s.horizon), kInf)};
                        },
                    },
                    v_);
}

double GroupFunction::inverse(double s) const {
  if (std::isnan(s)) fail(ErrorKind::kRange, "G^{-1} of NaN");
  const Interval r = range();
  if (!r.contains(s)) fail(ErrorKind::kRange, "s = " + fmt(s) + " is outside the range of " + name());
  return std::visit(Overloaded{
                        [s](const Identity&) { return s; },
                        [s](const Multiplicative& m) {
                          if (near_identity(m)) return s;
                          const double c = 1.0 - m.q;
                          return std::log1p(c * s) / c;
                        },
                        [s](const Kaniadakis& k) { return std::asinh(k.k * s) / k.k; },
                        [this, s](const auto&) { return numeric_inverse(s); },
                    },
                    v_);
}

double GroupFunction::numeric_inverse(double s) const {
  if (s == 0.0) return 0.0;
  const Interval dom = monotone_domain();
  const double edge = s > 0.0 ? dom.hi : dom.lo;
  const bool closed_edge = std::holds_alternative<SeriesDefined>(v_);
  auto residual = [&](double t) { return (*this)(t) - s; };

  // Grow the bracket [0, b] geometrically toward s; near a finite edge of the
  // monotone domain, close in on the edge instead of stepping past it.
  double a = 0.0;
  double fa = -s;
  double step = std::min(1.0, std::abs(s)) * (s > 0.0 ? 1.0 : -1.0);
  double b = step;
  double fb = 0.0;
  bool bracketed = false;
  for (int it = 0; it < 2100; ++it) {
    if (std::isfinite(edge) && ((s > 0.0 && b >= edge) || (s < 0.0 && b <= edge))) {
      b = closed_edge ? edge : a + 0.5 * (edge - a);
    }
    fb = residual(b);
    if (std::isnan(fb)) break;
    if ((fa < 0.0) != (fb < 0.0) || fb == 0.0) {
      bracketed = true;
      break;
    }
    if (closed_edge && b == edge) break;
    a = b;
    fa = fb;
    step *= 2.0;
    b = std::isfinite(edge) ? a + step : b + step;
    if (!std::isfinite(b)) break;
  }
  if (!bracketed) fail(ErrorKind::kConvergence, "could not bracket G^{-1}(" + fmt(s) + ") for " + name());
  if (fb == 0.0) return b;

  // Illinois regula falsi on down-weighted residuals wa, wb, falling back to
  // bisection when the secant step is unusable (infinite residuals).
  double wa = fa, wb = fb;
  int side = 0;
  for (int it = 0; it < 400; ++it) {
    const double width = std::abs(b - a);
    if (width <= kRootTolerance * std::max(1.0, std::min(std::abs(a), std::abs(b)))) break;
    const bool secant = std::isfinite(wa) && std::isfinite(wb);
    double c = secant ? (a * wb - b * wa) / (wb - wa) : 0.5 * (a + b);
    if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
    const double fc = residual(c);
    if (fc == 0.0) return c;
    if ((fc < 0.0) == (fb < 0.0)) {
      b = c;
      fb = wb = fc;
      if (secant && side == -1) wa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = wa = fc;
      if (secant && side == +1) wb *= 0.5;
      side = +1;
    }
  }
  double t = std::abs(fa) < std::abs(fb) ? a : b;
  // Newton polish; G' > 0 on the monotone branch
  for (int it = 0; it < 2; ++it) {
    const double d = derivative(t);
    if (!(d > 0.0) || !std::isfinite(d)) break;
    const double next = t - ((*this)(t)-s) / d;
    if (!dom.contains(next) && !(closed_edge && std::abs(next) <= dom.hi)) break;
    if (std::abs((*this)(next)-s) > std::abs((*this)(t)-s)) break;
    t = next;
  }
  return t;
}

double GroupFunction::chi(double x, double y) const {
  if (const auto* m = std::get_if<Multiplicative>(&v_)) {
    const Interval r = range();
    if (!r.contains(x) || !r.contains(y)) fail(ErrorKind::kRange, "chi argument outside the range of " + name());
    if (near_identity(*m)) return x + y;
    return x + y + (1.0 - m->q) * x * y;
  }
  return std::visit(Overloaded{
                        [x, y](const Identity&) { return x + y; },
                        [x, y](const Kaniadakis& k) {
                          const double k2 = k.k * k.k;
                          return x * std::sqrt(1.0 + k2 * y * y) + y * std::sqrt(1.0 + k2 * x * x);
                        },
                        [this, x, y](const auto&) { return (*this)(inverse(x) + inverse(y)); },
                    },
                    v_);
}

GroupLogarithm::GroupLogarithm(GroupFunction g, double gamma) : g_(std::move(g)), gamma_(gamma) {
  if (gamma == 0.0 || !std::isfinite(gamma)) fail(ErrorKind::kParameter, "group logarithm needs gamma != 0");
}

double GroupLogarithm::log(double x) const {
  if (!(x > 0.0)) fail(ErrorKind::kDomain, "ln_G needs x > 0, got " + fmt(x));
  return g_(gamma_ * std::log(x));
}

double GroupLogarithm::exp(double x) const { return std::exp(g_.inverse(x) / gamma_); }

double GroupLogarithm::log_derivative(double x) const {
  if (!(x > 0.0)) fail(ErrorKind::kDomain, "ln_G needs x > 0, got " + fmt(x));
  return g_.derivative(gamma_ * std::log(x)) * gamma_ / x;
}

bool check_concavity_condition(std::span<const double> a_seq) {
  for (std::size_t k = 0; k < a_seq.size(); ++k) {
    if (!(a_seq[k] > 0.0)) return false;
    if (k + 1 < a_seq.size() && !(a_seq[k] > static_cast<double>(k + 1) * a_seq[k + 1])) return false;
  }
  return true;
}

double max_second_difference(const GroupLogarithm& lg, double lo, double hi, int points) {
  if (points < 3 || !(lo > 0.0) || !(hi > lo)) fail(ErrorKind::kInput, "need >= 3 points in 0 < lo < hi");
  std::vector<double> x(static_cast<std::size_t>(points));
  std::vector<double> f(x.size());
  const double step = std::log(hi / lo) / (points - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = lo * std::exp(step * static_cast<double>(i));
    f[i] = lg.log(x[i]);
  }
  double worst = -kInf;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double left = (f[i] - f[i - 1]) / (x[i] - x[i - 1]);
    const double right = (f[i + 1] - f[i]) / (x[i + 1] - x[i]);
    worst = std::max(worst, 2.0 * (right - left) / (x[i + 1] - x[i - 1]));
  }
  return worst;
}

}  // namespace gek
