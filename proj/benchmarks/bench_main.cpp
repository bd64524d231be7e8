#include "hassett/constructions.hpp"
#include "hassett/enumeration.hpp"
#include "hassett/lattice.hpp"
#include "hassett/linalg.hpp"
#include "hassett/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace hassett;

static void BM_E8Roots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(e8_gram(), 2));
}
BENCHMARK(BM_E8Roots);

static void BM_E8NormFour(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(e8_gram(), 4));
}
BENCHMARK(BM_E8NormFour);

static const RealizationOutcome& corollary_outcome() {
  static const RealizationOutcome o = build_generic(corollary_targets(), BuildMode::Goal);
  return o;
}

static void BM_CorollaryMinimum(benchmark::State& state) {
  const IntMatrix g = *corollary_outcome().realizedGram;
  for (auto _ : state) benchmark::DoNotOptimize(minimum(g));
}
BENCHMARK(BM_CorollaryMinimum)->Unit(benchmark::kMillisecond);

static void BM_CorollarySmith(benchmark::State& state) {
  const IntMatrix coords = coordinate_matrix(*corollary_outcome().basis);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(coords));
}
BENCHMARK(BM_CorollarySmith)->Unit(benchmark::kMillisecond);

static void BM_CorollaryBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_generic(corollary_targets(), BuildMode::Goal));
}
BENCHMARK(BM_CorollaryBuild)->Unit(benchmark::kMillisecond);

static void BM_CorollaryVerify(benchmark::State& state) {
  const auto& basis = *corollary_outcome().basis;
  for (auto _ : state) benchmark::DoNotOptimize(verify_witness(basis, corollary_targets()));
}
BENCHMARK(BM_CorollaryVerify)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
