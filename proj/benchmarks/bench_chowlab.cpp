#include "chowlab/finite_field.hpp"
#include "chowlab/grassmann.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/motive.hpp"
#include "chowlab/weil.hpp"

#include <benchmark/benchmark.h>

using namespace chowlab;

static void BM_NormalFormDoubleBundle(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  const auto R = build_double_bundle(r, Coefficients::Z, 2 * r + 4);
  Exponents raw(R.ring.num_generators(), 0);
  raw[0] = 2 * r;
  raw[1] = 2;
  for (auto _ : state) benchmark::DoNotOptimize(R.ring.normal_form(raw));
}
BENCHMARK(BM_NormalFormDoubleBundle)->DenseRange(1, 3);

static void BM_MaxOrthBasis(benchmark::State& state) {
  const auto N = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    const auto a = max_orth_ring(N);
    benchmark::DoNotOptimize(poincare(a));
  }
}
BENCHMARK(BM_MaxOrthBasis)->DenseRange(4, 8, 2);

static void BM_QuotientGeneration(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  const auto ring = state.range(1) == 0 ? Coefficients::Z : Coefficients::F2;
  for (auto _ : state) {
    const auto [a, sigma] = swap_polynomial_ring(0, r, ring, 6);
    std::vector<Element> gens;
    for (std::uint32_t i = 1; i <= r; ++i)
      gens.push_back(a.multiply(a.generator_element("a" + std::to_string(i)), a.generator_element("b" + std::to_string(i))));
    benchmark::DoNotOptimize(quotient_generation_check(sigma, a, gens, 6).pass);
  }
}
BENCHMARK(BM_QuotientGeneration)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_Freeness(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  const auto R = build_double_bundle(r, Coefficients::Z, 2 * r + 4);
  for (auto _ : state) benchmark::DoNotOptimize(freeness_check(R).pass);
}
BENCHMARK(BM_Freeness)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_IsochowQuotient(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isochow_quotient(2 * r, r));
}
BENCHMARK(BM_IsochowQuotient)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CountIsotropic(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const HermitianSpace h(p, std::vector<std::uint32_t>(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(count_isotropic(h, static_cast<int>(n / 2)));
}
BENCHMARK(BM_CountIsotropic)->ArgsProduct({{2, 3}, {2, 3, 4}})->Unit(benchmark::kMillisecond);

static void BM_CountSingularHyperbolic(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto q = QuadraticSpace::hyperbolic(3, N);
  for (auto _ : state) benchmark::DoNotOptimize(count_singular(q, static_cast<int>(N)));
}
BENCHMARK(BM_CountSingularHyperbolic)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_EssentialPoincareRecursion(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 0; n <= 12; ++n)
      for (int r = 0; r <= n / 2; ++r) benchmark::DoNotOptimize(decompose_step(n, r).realize());
}
BENCHMARK(BM_EssentialPoincareRecursion);
BENCHMARK_MAIN();
