#include <benchmark/benchmark.h>

#include <random>

#include "abelsnf/cayley.hpp"
#include "abelsnf/locfield.hpp"
#include "abelsnf/predictor.hpp"
#include "abelsnf/snf.hpp"
#include "abelsnf/spectrum.hpp"

using namespace abelsnf;

namespace {

void BM_SnfCubeLaplacian(benchmark::State& state) {
  const GroupSpec spec(std::vector<std::uint32_t>(static_cast<std::size_t>(state.range(0)), 2));
  const auto lap = laplacian(spec, weight_class(spec, 1));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(lap));
  state.SetLabel(std::to_string(spec.size()) + " x " + std::to_string(spec.size()));
}
BENCHMARK(BM_SnfCubeLaplacian)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

// Entry growth forces the big-integer fallback here.
void BM_SnfHammingDistanceTwo(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const GroupSpec spec(std::vector<std::uint32_t>(4, q));
  const auto a = adjacency_matrix(spec, weight_class(spec, 2));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SnfHammingDistanceTwo)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LocalDivisors(benchmark::State& state) {
  const GroupSpec spec({4, 4, 4, 4});
  const auto a = adjacency_matrix(spec, weight_class(spec, 2));
  for (auto _ : state) benchmark::DoNotOptimize(elementary_divisors_local(a, 3));
}
BENCHMARK(BM_LocalDivisors)->Unit(benchmark::kMillisecond);

CyclotomicInteger random_element(std::mt19937_64& rng, std::uint32_t m) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<std::int64_t> c(m);
  for (auto& v : c) v = coef(rng);
  return CyclotomicInteger::from_exponent_counts(m, c);
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto x = random_element(rng, m), y = random_element(rng, m);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(7)->Arg(60)->Arg(210);

void BM_PiValuation(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto ctx = PrimeContext::create(2, m);
  std::mt19937_64 rng(2);
  auto x = random_element(rng, m) * CyclotomicInteger::from_integer(m, 96);
  for (auto _ : state) benchmark::DoNotOptimize(pi_valuation(x, ctx));
}
BENCHMARK(BM_PiValuation)->Arg(7)->Arg(15)->Arg(63);

void BM_FactorCyclotomic(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_cyclotomic_mod_p(2, m));
}
BENCHMARK(BM_FactorCyclotomic)->Arg(63)->Arg(255)->Arg(1023);

void BM_SpectrumExplicitSet(benchmark::State& state) {
  const GroupSpec spec({3, 5, 7});
  std::vector<std::uint64_t> idx;
  for (std::uint64_t i = 1; i < spec.size(); i += 3) idx.push_back(i);
  const auto combo = MatrixCombo::adjacency(ConnectingSet::from_indices(spec, idx));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_via_characters(spec, combo));
}
BENCHMARK(BM_SpectrumExplicitSet)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
