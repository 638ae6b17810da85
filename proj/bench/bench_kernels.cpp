// Serial reference kernels against their OpenMP versions.
//
//   lgroup_bench --benchmark_filter=Spectral

#include <benchmark/benchmark.h>

#include "lgroup/laws.hpp"
#include "lgroup/semisimple.hpp"

namespace {

using namespace lgroup;

// Z^k, with k primes and 2^k ideals.
UnitalGroup zk(std::size_t k) {
  const Structure s = Structure::prod(std::vector<Structure>(k, Structure::atom()));
  return UnitalGroup(s, from_leaves(s, std::vector<Integer>(k, 1)));
}

// (Z x-> Z)^k, with 2k primes and 3^k ideals.
UnitalGroup lexk(std::size_t k) {
  const Structure s = Structure::prod(std::vector<Structure>(k, Structure::lex(Structure::atom())));
  std::vector<Integer> leaf(2 * k, 0);
  for (std::size_t j = 0; j < k; ++j) leaf[2 * j] = 1;
  return UnitalGroup(s, from_leaves(s, leaf));
}

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

void BM_SpectralReportZk(benchmark::State& state) {
  const SpectrumSpace X(zk(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_axioms_report(X, exec_of(state)));
}

void BM_SpectralReportLex(benchmark::State& state) {
  const SpectrumSpace X(lexk(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_axioms_report(X, exec_of(state)));
}

void BM_StronglySemisimple(benchmark::State& state) {
  const SpectrumSpace X(zk(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_semisimple(X, exec_of(state)));
}

void BM_UpgradeLemma(benchmark::State& state) {
  const UnitalGroup G = lexk(static_cast<std::size_t>(state.range(0)));
  const SpectrumSpace X(G);
  std::mt19937_64 rng(1);
  const auto sample = sample_elements(G, rng, 8);
  const std::span<const Element> head(sample.data(), std::min<std::size_t>(sample.size(), 24));
  for (auto _ : state) benchmark::DoNotOptimize(upgrade_lemma(X, head, exec_of(state)));
}

}  // namespace

// Second argument: 0 serial, 1 parallel.
BENCHMARK(BM_SpectralReportZk)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectralReportLex)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StronglySemisimple)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UpgradeLemma)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
