#include <benchmark/benchmark.h>

#include "nsgps/classify.hpp"
#include "nsgps/enumerate.hpp"
#include "nsgps/invariants.hpp"
#include "nsgps/presentations.hpp"

using namespace nsgps;

static void genus_census(benchmark::State& state) {
  EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_by_genus(state.range(0), opts));
  }
}
BENCHMARK(genus_census)->Args({20, 1})->Args({20, 0})->Args({25, 0})->Unit(benchmark::kMillisecond);

static void apery_set(benchmark::State& state) {
  Int const m = state.range(0);
  for (auto _ : state) {
    auto s = from_generators({m, m + 7, m + 31, 2 * m + 3});
    benchmark::DoNotOptimize(s.apery(m + 7).residues.data());
  }
}
BENCHMARK(apery_set)->Arg(101)->Arg(1009)->Arg(10007);

static void factorizations_of(benchmark::State& state) {
  auto s = from_generators({10, 11, 17, 23});
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorizations(s, state.range(0)));
  }
}
BENCHMARK(factorizations_of)->Arg(60)->Arg(600)->Arg(2000);

static void omega_primality(benchmark::State& state) {
  auto s = from_generators({10, 11, 17, 23});
  for (auto _ : state) {
    benchmark::DoNotOptimize(omega(s));
  }
}
BENCHMARK(omega_primality);

static void irreducible_decomposition(benchmark::State& state) {
  auto s = from_generators({31, 47, 59, 73, 101});
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_into_irreducibles(s));
  }
}
BENCHMARK(irreducible_decomposition)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
