#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "unicyclic/canonical.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/verify.hpp"

using namespace unicyclic;

namespace {

// A family member on n vertices with girth ~n/3 and a few pendants.
Graph sample(int n) {
  const int m = std::max(3, n / 3);
  return build_U(standard_spec(n, m, n - (m + 1) / 2 - 2)).graph;
}

void BM_CanonicalKey(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  for (auto _ : state) {
    state.PauseTiming();
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    state.ResumeTiming();
    benchmark::DoNotOptimize(canonical_key(h));
  }
}
BENCHMARK(BM_CanonicalKey)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_StructuralProfile(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structural_profile(g));
}
BENCHMARK(BM_StructuralProfile)->Arg(10)->Arg(30)->Arg(100)->Arg(300);

// Results are cached per process, so only the first call does the work.
void BM_EnumerateUnicyclicCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto strategy = static_cast<Strategy>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_unicyclic(n, {}, {n, strategy}).size());
  }
}
BENCHMARK(BM_EnumerateUnicyclicCold)
    ->Args({9, static_cast<int>(Strategy::Forest)})
    ->Args({9, static_cast<int>(Strategy::TreeEdge)})
    ->Args({10, static_cast<int>(Strategy::Forest)})
    ->Iterations(1)
    ->Unit(benchmark::kMillisecond);

void BM_ExtremalSearchWarm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  enumerate_unicyclic(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal_search(n, {4, {}, {}, {}},
                                             Objective::ReverseDegreeDistance,
                                             Direction::Max));
  }
}
BENCHMARK(BM_ExtremalSearchWarm)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_VerifyClaim(benchmark::State& state, const char* id, int n_max) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_claim(id, n_max));
}
BENCHMARK_CAPTURE(BM_VerifyClaim, lemma9_n14, "lemma9-consistency", 14)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyClaim, thm1_n10, "thm1", 10)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
