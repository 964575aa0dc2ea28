#include <benchmark/benchmark.h>

#include "braid3/errors.hpp"
#include "braid3/factor_search.hpp"
#include "braid3/garside.hpp"
#include "braid3/hurwitz.hpp"
#include "braid3/polygon.hpp"
#include "braid3/selftest/oracles.hpp"

namespace {

using namespace braid3;

const Word kExample = parse_word("s1^2 s2^2 s1^2 s2^2 D^-2");

void BM_Normalize(benchmark::State& state) {
  selftest::Rng rng(7);
  const Word w = selftest::random_word(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_DualNormalize(benchmark::State& state) {
  selftest::Rng rng(7);
  const Word w = selftest::random_word(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w, Structure::Dual));
}
BENCHMARK(BM_DualNormalize)->RangeMultiplier(4)->Range(16, 4096);

void BM_EnumerateIndexSets(benchmark::State& state) {
  // W = D^p s1^2 s2^2, four extra letters to place.
  const int p = static_cast<int>(state.range(0));
  const Word w = half_twist_word(p) * parse_word("s1^2 s2^2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_index_sets(w, p));
}
BENCHMARK(BM_EnumerateIndexSets)->DenseRange(1, 6);

void BM_CountOrbitsExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_orbits(kExample));
}
BENCHMARK(BM_CountOrbitsExample);

void BM_OrbitOfDeltaSquared(benchmark::State& state) {
  const Factorization f = Factorization::from_words(
      {parse_word("s1"), parse_word("s2"), parse_word("s1"), parse_word("s1"),
       parse_word("s2"), parse_word("s1")});
  SearchLimits limits;
  limits.max_states = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(orbit(f, limits));
    } catch (const CapExceeded&) {
    }
  }
}
BENCHMARK(BM_OrbitOfDeltaSquared)->Arg(1'000)->Arg(10'000);

void BM_OrbitCountE2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_count_e2(kExample));
}
BENCHMARK(BM_OrbitCountE2);

}  // namespace

BENCHMARK_MAIN();
