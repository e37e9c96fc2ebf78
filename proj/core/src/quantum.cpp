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

#include "gek/quantum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string_view>

#include "gek/entropy.hpp"
#include "gek/errors.hpp"

namespace gek::quantum {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v))
    fail(ErrorKind::kInput, "line " + std::to_string(line) + ": bad number '" + std::string(token) + "'");
  return v;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  const auto n = entries_.rows();
  if (n == 0 || entries_.cols() != n) fail(ErrorKind::kInput, "density matrix must be square and non-empty");
  const double skew = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(skew <= kHermitianTolerance))
    fail(ErrorKind::kInput, "density matrix is not Hermitian (max |rho - rho^H| = " + std::to_string(skew) + ")");
  const double trace = entries_.trace().real();
  if (!(std::abs(trace - 1.0) <= kTraceTolerance))
    fail(ErrorKind::kInput, "density matrix trace is " + std::to_string(trace) + ", expected 1");

  const Matrix hermitian = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::kConvergence, "eigendecomposition failed");
  const auto& ev = solver.eigenvalues();
  eigenvalues_.assign(ev.data(), ev.data() + ev.size());
  std::sort(eigenvalues_.begin(), eigenvalues_.end(), std::greater<>());
  if (eigenvalues_.back() < kNegativeFloor)
    fail(ErrorKind::kInput, "density matrix has negative eigenvalue " + std::to_string(eigenvalues_.back()));
  for (auto& l : eigenvalues_)
    if (l < kClamp) l = 0.0;
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> weights) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(weights.size()), static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weights[i];
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) fail(ErrorKind::kInput, "pure state vector must be nonzero");
  const Eigen::VectorXcd v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) fail(ErrorKind::kInput, "dimension must be positive");
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(dim));
}

Distribution DensityMatrix::spectrum() const { return Distribution(eigenvalues_, {1e-9, true}); }

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  DensityMatrix::Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return DensityMatrix(std::move(out));
}

std::vector<double> eigenvalues(const DensityMatrix& rho) { return rho.eigenvalues(); }

double trace_power(const DensityMatrix& rho, double alpha) { return power_sum(rho.spectrum(), alpha); }

double quantum_z_entropy(const GroupFunction& g, double alpha, const DensityMatrix& rho) {
  if (alpha == 1.0) fail(ErrorKind::kParameter, "alpha = 1 is the von Neumann limit; use von_neumann");
  return z_entropy(g, alpha, rho.spectrum()).value;
}

double quantum_renyi(double alpha, const DensityMatrix& rho) {
  return quantum_z_entropy(GroupFunction::identity(), alpha, rho);
}

double von_neumann(const DensityMatrix& rho) { return boltzmann(rho.spectrum()).value; }

double quantum_z_ab(double a, double b, double alpha, const DensityMatrix& rho) {
  return z_ab(a, b, alpha, rho.spectrum()).value;
}

DensityMatrix read_density_matrix(std::istream& in) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> numbers;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      numbers.push_back(parse_number(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (numbers.size() % 2 != 0)
      fail(ErrorKind::kInput, "line " + std::to_string(line_no) + ": expected real,imag pairs");
    std::vector<std::complex<double>> row;
    for (std::size_t i = 0; i < numbers.size(); i += 2) row.emplace_back(numbers[i], numbers[i + 1]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorKind::kInput, "density matrix file is empty");
  const auto n = static_cast<Eigen::Index>(rows.size());
  DensityMatrix::Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n)
      fail(ErrorKind::kInput, "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n));
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return DensityMatrix(std::move(m));
}

}  // namespace gek::quantum
