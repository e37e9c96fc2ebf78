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

#include "gek/formal_series.hpp"

#include <algorithm>
#include <string>

#include "gek/errors.hpp"

namespace gek::series {
namespace {

Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Dense trivariate series truncated at total degree `order`, only used to
// evaluate the two association orders of a bivariate law.
class Trivariate {
 public:
  explicit Trivariate(int order)
      : order_(order), coeffs_(static_cast<std::size_t>((order + 1) * (order + 1) * (order + 1))) {}

  int order() const { return order_; }
  Rational& at(int i, int j, int k) { return coeffs_[index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return coeffs_[index(i, j, k)]; }

  static Trivariate one(int order) {
    Trivariate t(order);
    t.at(0, 0, 0) = 1;
    return t;
  }

  Trivariate operator*(const Trivariate& o) const {
    Trivariate r(order_);
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j)
        for (int k = 0; i + j + k <= order_; ++k) {
          const Rational& c = at(i, j, k);
          if (c == 0) continue;
          const int left = order_ - i - j - k;
          for (int p = 0; p <= left; ++p)
            for (int q = 0; p + q <= left; ++q)
              for (int s = 0; p + q + s <= left; ++s) {
                const Rational& d = o.at(p, q, s);
                if (d != 0) r.at(i + p, j + q, k + s) += c * d;
              }
        }
    return r;
  }

  Trivariate& add_scaled(const Rational& c, const Trivariate& o) {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (o.coeffs_[n] != 0) coeffs_[n] += c * o.coeffs_[n];
    return *this;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(order_ + 1);
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k);
  }

  int order_;
  std::vector<Rational> coeffs_;
};

// psi(A, B) for trivariate A, B with zero constant terms.
Trivariate substitute(const BivariateTruncatedSeries& psi, const Trivariate& a, const Trivariate& b) {
  const int n = a.order();
  std::vector<Trivariate> a_pow{Trivariate::one(n)};
  std::vector<Trivariate> b_pow{Trivariate::one(n)};
  for (int e = 1; e <= n; ++e) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }
  Trivariate result(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const Rational c = psi.coeff(i, j);
      if (c == 0) continue;
      result.add_scaled(c, a_pow[static_cast<std::size_t>(i)] * b_pow[static_cast<std::size_t>(j)]);
    }
  return result;
}

Trivariate lift(const BivariateTruncatedSeries& psi, int shift) {
  // shift 0: psi(x, y); shift 1: psi(y, z)
  Trivariate t(psi.order());
  for (int i = 0; i <= psi.order(); ++i)
    for (int j = 0; i + j <= psi.order(); ++j) {
      const Rational c = psi.coeff(i, j);
      if (c == 0) continue;
      if (shift == 0)
        t.at(i, j, 0) = c;
      else
        t.at(0, i, j) = c;
    }
  return t;
}

Trivariate variable(int order, int which) {
  Trivariate t(order);
  if (order >= 1) t.at(which == 0 ? 1 : 0, which == 1 ? 1 : 0, which == 2 ? 1 : 0) = 1;
  return t;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorKind::kInput, "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) fail(ErrorKind::kInput, "negative series order");
  return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) fail(ErrorKind::kInput, "identity series needs order >= 1");
  auto s = zero(order);
  s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) fail(ErrorKind::kInput, "negative series order");
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(order + 1, std::ssize(coeffs_)));
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries(std::move(c));
}

std::vector<double> TruncatedSeries::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

bool TruncatedSeries::is_normalized() const { return order() >= 1 && coeffs_[0] == 0 && coeffs_[1] == 1; }

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  auto r = TruncatedSeries::zero(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<std::size_t>(k)] = f[k] + g[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  auto r = TruncatedSeries::zero(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<std::size_t>(k)] = f[k] - g[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  auto r = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[static_cast<std::size_t>(i + j)] += f[i] * g[j];
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) {
  auto r = f;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

TruncatedSeries series_from_b_sequence(std::span<const Rational> b, int order) {
  if (order < 1) fail(ErrorKind::kInput, "b-sequence series needs order >= 1");
  if (b.empty() || b[0] != 1) fail(ErrorKind::kInvalidNormalization, "b_0 must equal 1");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i < order && i < std::ssize(b); ++i)
    c[static_cast<std::size_t>(i + 1)] = b[static_cast<std::size_t>(i)] / Rational(i + 1);
  return TruncatedSeries(std::move(c));
}

std::vector<Rational> b_sequence_of(const TruncatedSeries& f) {
  std::vector<Rational> b;
  for (int k = 0; k < f.order(); ++k) b.push_back(Rational(k + 1) * f[k + 1]);
  return b;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] != 0) fail(ErrorKind::kCompositionDomain, "inner series has nonzero constant term");
  const int n = std::min(f.order(), g.order());
  const auto inner = g.truncated(n);
  // Horner: (((f_n) g + f_{n-1}) g + ...) + f_0
  auto acc = TruncatedSeries::zero(n);
  for (int k = n; k >= 0; --k) {
    acc = acc * inner;
    std::vector<Rational> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += f[k];
    acc = TruncatedSeries(std::move(v));
  }
  return acc;
}

TruncatedSeries reversion(const TruncatedSeries& f) {
  if (!f.is_normalized())
    fail(ErrorKind::kNonInvertible, "reversion requires c_0 = 0 and c_1 = 1");
  const int n = f.order();
  // h(t) = f(t)/t = 1 + c_2 t + ..., known to order n-1; u = 1/h.
  std::vector<Rational> h(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) h[static_cast<std::size_t>(k)] = f[k + 1];
  std::vector<Rational> u(static_cast<std::size_t>(n));
  u[0] = 1;
  for (int k = 1; k < n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += h[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(k - j)];
    u[static_cast<std::size_t>(k)] = -s;
  }
  const TruncatedSeries u_series(u);
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  auto u_pow = u_series;  // u^1
  for (int m = 1; m <= n; ++m) {
    g[static_cast<std::size_t>(m)] = u_pow[m - 1] / Rational(m);
    if (m < n) u_pow = u_pow * u_series;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries multiplicative_exponential_series(const Rational& q, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  const Rational base = 1 - q;
  for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = power(base, k - 1) / factorial(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sinh_series(const Rational& k, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; n += 2) c[static_cast<std::size_t>(n)] = power(k, n - 1) / factorial(n);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries abel_exponential_series(const Rational& a, const Rational& b, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int i = 0; i < n; ++i) s += power(a, i) * power(b, n - 1 - i);
    c[static_cast<std::size_t>(n)] = s / factorial(n);
  }
  return TruncatedSeries(std::move(c));
}

BivariateTruncatedSeries::BivariateTruncatedSeries(int order)
    : order_(order), coeffs_(static_cast<std::size_t>((order + 1) * (order + 1))) {
  if (order < 0) fail(ErrorKind::kInput, "negative series order");
}

std::size_t BivariateTruncatedSeries::index(int i, int j) const {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_ + 1) + static_cast<std::size_t>(j);
}

BivariateTruncatedSeries BivariateTruncatedSeries::from_univariate(const TruncatedSeries& f, bool in_y) {
  BivariateTruncatedSeries r(f.order());
  for (int k = 0; k <= f.order(); ++k) {
    if (in_y)
      r.set(0, k, f[k]);
    else
      r.set(k, 0, f[k]);
  }
  return r;
}

Rational BivariateTruncatedSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) return Rational(0);
  return coeffs_[index(i, j)];
}

void BivariateTruncatedSeries::set(int i, int j, Rational value) {
  if (i < 0 || j < 0 || i + j > order_)
    fail(ErrorKind::kInput, "coefficient (" + std::to_string(i) + "," + std::to_string(j) + ") exceeds order");
  coeffs_[index(i, j)] = std::move(value);
}

std::vector<std::pair<std::pair<int, int>, Rational>> BivariateTruncatedSeries::nonzero_terms() const {
  std::vector<std::pair<std::pair<int, int>, Rational>> out;
  for (int d = 0; d <= order_; ++d)
    for (int i = d; i >= 0; --i) {
      const auto& c = coeffs_[index(i, d - i)];
      if (c != 0) out.push_back({{i, d - i}, c});
    }
  return out;
}

BivariateTruncatedSeries operator+(const BivariateTruncatedSeries& f, const BivariateTruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  BivariateTruncatedSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.set(i, j, f.coeff(i, j) + g.coeff(i, j));
  return r;
}

BivariateTruncatedSeries operator*(const BivariateTruncatedSeries& f, const BivariateTruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  BivariateTruncatedSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const Rational c = f.coeff(i, j);
      if (c == 0) continue;
      for (int p = 0; i + j + p <= n; ++p)
        for (int q = 0; i + j + p + q <= n; ++q) {
          const Rational d = g.coeff(p, q);
          if (d != 0) r.coeffs_[r.index(i + p, j + q)] += c * d;
        }
    }
  return r;
}

bool operator==(const BivariateTruncatedSeries& f, const BivariateTruncatedSeries& g) {
  if (f.order() != g.order()) return false;
  for (int i = 0; i <= f.order(); ++i)
    for (int j = 0; i + j <= f.order(); ++j)
      if (f.coeff(i, j) != g.coeff(i, j)) return false;
  return true;
}

BivariateTruncatedSeries compose(const TruncatedSeries& f, const BivariateTruncatedSeries& inner) {
  if (inner.coeff(0, 0) != 0) fail(ErrorKind::kCompositionDomain, "inner series has nonzero constant term");
  const int n = std::min(f.order(), inner.order());
  BivariateTruncatedSeries acc(n);
  for (int k = n; k >= 0; --k) {
    acc = acc * inner;
    acc.set(0, 0, acc.coeff(0, 0) + f[k]);
  }
  return acc;
}

BivariateTruncatedSeries group_law_from_G(const TruncatedSeries& g, int order) {
  if (order < 1) fail(ErrorKind::kInput, "group law needs order >= 1");
  if (g.order() < order) fail(ErrorKind::kInput, "G is known only to order " + std::to_string(g.order()));
  const auto gt = g.truncated(order);
  const auto g_inv = reversion(gt);
  const auto sum = BivariateTruncatedSeries::from_univariate(g_inv, false) +
                   BivariateTruncatedSeries::from_univariate(g_inv, true);
  return compose(gt, sum);
}

AxiomReport verify_group_axioms(const BivariateTruncatedSeries& psi) {
  AxiomReport report;
  const int n = psi.order();

  for (int k = 0; k <= n && report.identity.holds; ++k) {
    const Rational expected = (k == 1) ? 1 : 0;
    if (psi.coeff(k, 0) != expected) report.identity = {false, {k, 0}};
    else if (psi.coeff(0, k) != expected) report.identity = {false, {0, k}};
  }

  for (int d = 0; d <= n && report.commutativity.holds; ++d)
    for (int i = d; i >= 0; --i)
      if (psi.coeff(i, d - i) != psi.coeff(d - i, i)) {
        report.commutativity = {false, {i, d - i}};
        break;
      }

  const auto x = variable(n, 0);
  const auto z = variable(n, 2);
  const auto left = substitute(psi, lift(psi, 0), z);   // Psi(Psi(x,y), z)
  const auto right = substitute(psi, x, lift(psi, 1));  // Psi(x, Psi(y,z))
  for (int d = 0; d <= n && report.associativity.holds; ++d)
    for (int i = d; i >= 0 && report.associativity.holds; --i)
      for (int j = d - i; j >= 0; --j) {
        const int k = d - i - j;
        if (left.at(i, j, k) != right.at(i, j, k)) {
          report.associativity = {false, {i, j, k}};
          break;
        }
      }
  return report;
}

AbelCoefficients abel_group_coefficients(const Rational& a, const Rational& b, int n) {
  if (n < 1) fail(ErrorKind::kInput, "need at least one Abel coefficient");
  AbelCoefficients out{a, b, {}};
  out.betas.push_back(a + b);
  for (int m = 2; m <= n; ++m) {
    Rational product = 1;
    for (int i = 0; i <= m - 1; ++i) product *= Rational(i) * a + Rational(m - 1 - i) * b;
    const Rational sign = (m % 2 == 0) ? -1 : 1;
    out.betas.push_back(sign * product / (factorial(m) * Rational(m - 1)));
  }
  return out;
}

}  // namespace gek::series
