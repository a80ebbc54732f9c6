#include <benchmark/benchmark.h>

#include "spinverlinde/fusion.hpp"
#include "spinverlinde/heisenberg.hpp"
#include "spinverlinde/spin_structures.hpp"

using namespace spinverlinde;

static void BM_VerlindeTrace(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const int level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion::verlinde_dim(genus, level));
}
BENCHMARK(BM_VerlindeTrace)->Args({2, 64})->Args({6, 64})->Args({6, 256})->Args({20, 128})->Unit(benchmark::kMillisecond);

static void BM_VerlindeOracle(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const int level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion::verlinde_trig_oracle(genus, level).value);
}
BENCHMARK(BM_VerlindeOracle)->Args({2, 64})->Args({6, 256})->Args({20, 128})->Unit(benchmark::kMillisecond);

static void BM_ProjectionOrthogonality(benchmark::State& state) {
  const f2::SymplecticSpace space(static_cast<int>(state.range(0)));
  const auto refinements = spin::enumerate_refinements(space);
  const auto shifts = f2::enumerate_vectors(space);
  for (auto _ : state) {
    bool ok = true;
    for (const auto& sigma : refinements)
      for (const auto& l : shifts)
        if (!l.is_zero()) ok = ok && heis::orthogonality_check(sigma, l);
    benchmark::DoNotOptimize(ok);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(refinements.size() * (shifts.size() - 1)));
}
BENCHMARK(BM_ProjectionOrthogonality)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_HeisenbergRep(benchmark::State& state) {
  const heis::HeisenbergGroup group{f2::SymplecticSpace(static_cast<int>(state.range(0)))};
  const auto h = group.element(1, group.space().vector(group.space().size() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(heis::heisenberg_rep(group, h));
}
BENCHMARK(BM_HeisenbergRep)->DenseRange(2, 10, 2);
BENCHMARK_MAIN();
