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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gek/entropy.hpp"
#include "gek/formal_series.hpp"
#include "gek/group_function.hpp"
#include "gek/quantum.hpp"

namespace {

std::vector<gek::Rational> b_sequence(int order) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<gek::Rational> b{1};
  for (int k = 1; k < order; ++k) {
    gek::Rational r(num(rng), den(rng));
    r.canonicalize();
    b.push_back(r);
  }
  return b;
}

gek::Distribution random_distribution(std::size_t w) {
  std::mt19937_64 rng(w);
  std::exponential_distribution<double> e;
  std::vector<double> p(w);
  double s = 0.0;
  for (auto& x : p) s += (x = e(rng));
  for (auto& x : p) x /= s;
  return gek::Distribution(std::move(p), {1e-9, true});
}

void BM_Reversion(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto f = gek::series::series_from_b_sequence(b_sequence(order), order);
  for (auto _ : state) benchmark::DoNotOptimize(gek::series::reversion(f));
}
BENCHMARK(BM_Reversion)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GroupLawFromG(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto g = gek::series::series_from_b_sequence(b_sequence(order), order);
  for (auto _ : state) benchmark::DoNotOptimize(gek::series::group_law_from_G(g, order));
}
BENCHMARK(BM_GroupLawFromG)->Arg(4)->Arg(8)->Arg(12);

void BM_VerifyAxioms(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto law = gek::series::group_law_from_G(gek::series::series_from_b_sequence(b_sequence(order), order), order);
  for (auto _ : state) benchmark::DoNotOptimize(gek::series::verify_group_axioms(law));
}
BENCHMARK(BM_VerifyAxioms)->Arg(4)->Arg(8);

void BM_ZEntropy(benchmark::State& state) {
  const auto p = random_distribution(static_cast<std::size_t>(state.range(0)));
  const auto g = gek::GroupFunction::abel(0.6, -0.3);
  for (auto _ : state) benchmark::DoNotOptimize(gek::z_entropy(g, 0.4, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ZEntropy)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_AbelChi(benchmark::State& state) {
  const auto g = gek::GroupFunction::abel(2.0, 1.0);
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.chi(x, 0.7));
    x += 1e-9;
  }
}
BENCHMARK(BM_AbelChi);

void BM_DickeSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gek::quantum::DickeSpec spec{1, n, {n / 2, n - n / 2}, n / 2};
  for (auto _ : state) benchmark::DoNotOptimize(gek::quantum::dicke_block_spectrum(spec));
}
BENCHMARK(BM_DickeSpectrum)->DenseRange(4, 14, 2);

void BM_DickeReducedDensity(benchmark::State& state) {
  const gek::quantum::DickeSpec spec{2, 9, {3, 3, 3}, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(gek::quantum::dicke_reduced_density(spec));
}
BENCHMARK(BM_DickeReducedDensity)->DenseRange(1, 8);

}  // namespace

BENCHMARK_MAIN();
