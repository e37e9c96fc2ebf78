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

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gek/distribution.hpp"
#include "gek/group_function.hpp"

namespace gek::quantum {

/// Hermitian, positive semi-definite, unit-trace matrix. Immutable; the
/// spectrum is computed once at construction.
class DensityMatrix {
 public:
  using Matrix = Eigen::MatrixXcd;

  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kNegativeFloor = -1e-10;
  static constexpr double kClamp = 1e-12;

  /// Throws kInput on a non-square, non-Hermitian, non-PSD or
  /// non-unit-trace matrix.
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix diagonal(std::span<const double> weights);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  [[nodiscard]] const Matrix& entries() const noexcept { return entries_; }
  /// Nonincreasing, with entries below 1e-12 set to 0.
  [[nodiscard]] const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  /// The spectrum as a classical distribution.
  [[nodiscard]] Distribution spectrum() const;

 private:
  Matrix entries_;
  std::vector<double> eigenvalues_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

std::vector<double> eigenvalues(const DensityMatrix& rho);
/// sum_i lambda_i^alpha over the clamped spectrum, 0^alpha = 0.
double trace_power(const DensityMatrix& rho, double alpha);
double quantum_z_entropy(const GroupFunction& g, double alpha, const DensityMatrix& rho);
double quantum_renyi(double alpha, const DensityMatrix& rho);
double von_neumann(const DensityMatrix& rho);
/// [(tr rho^alpha)^a - (tr rho^alpha)^b] / ((a - b)(1 - alpha)).
double quantum_z_ab(double a, double b, double alpha, const DensityMatrix& rho);

/// Plain-text matrix: one row per line, each row a comma-separated list of
/// real,imag pairs. Blank lines and lines starting with '#' are ignored.
DensityMatrix read_density_matrix(std::istream& in);

/// su(m+1) Dicke state on N sites with occupations k_1..k_{m+1}, reduced to
/// the first L sites.
struct DickeSpec {
  int m = 1;
  int n = 2;
  std::vector<int> occupations;
  int l = 1;

  /// Throws kInput on invalid occupations, L out of [1, N-1] or N beyond the
  /// exact-computation bound.
  void validate() const;
};

/// Largest N accepted for su(m+1): 14 for m = 1, 10 for m = 2, otherwise the
/// largest N with (m+1)^N <= 3^10.
int dicke_max_sites(int m);

struct BlockOccupation {
  std::vector<int> counts;  // l_1..l_{m+1}, summing to L
  double weight;            // prod_j C(k_j, l_j) / C(N, L)
};

/// Block occupations with nonzero weight, in lexicographic order of counts.
std::vector<BlockOccupation> dicke_block_spectrum(const DickeSpec& spec);

/// Reduced state in the block-occupation basis (diagonal).
DensityMatrix dicke_reduced_density(const DickeSpec& spec);

/// Z_{a,0}[rho_L] = [(tr rho_L^alpha)^a - 1] / (a (1 - alpha)) from the exact
/// block spectrum. alpha = 0 is allowed here: tr rho^0 is the rank.
double lmg_exact_za0(const DickeSpec& spec, double a, double alpha);

/// Parameters of the leading large-L formula for Z_{a,0} on the LMG ground
/// state.
struct LmgParams {
  double a = 1.0;
  int m = 1;
  double alpha = 0.5;
  double gamma = 0.5;  // block ratio L/N
  std::vector<double> densities;

  void validate() const;
};

/// L^e / (a (1 - alpha) alpha^{ma/2}) * [2 pi (1 - gamma) prod_j n_j^{1/m}]^e
/// with e = a m (1 - alpha) / 2. Throws kParameter for a = 0 or alpha = 1 and
/// kDomain for alpha <= 0.
double lmg_asymptotic_za0(const LmgParams& params, int l);

/// alpha = 1 - 2/(a m), the value that makes the leading term linear in L.
double extensive_alpha(double a, int m);

}  // namespace gek::quantum
