#include <benchmark/benchmark.h>

#include "ordlat/backends.hpp"
#include "ordlat/lo_space.hpp"

using namespace ordlat;

static void BM_BallFree2(benchmark::State& state) {
  auto g = make_free_group(2);
  for (auto _ : state) benchmark::DoNotOptimize(make_ball(g, static_cast<int>(state.range(0)))->size());
}
BENCHMARK(BM_BallFree2)->DenseRange(2, 5);

static void BM_HandleReduction(benchmark::State& state) {
  auto b = make_braid_group(4);
  const Word delta = braid::garside_half_twist(b);
  const Word w = delta.pow(static_cast<int>(state.range(0))) * b->parse_word("s1^-1*s3*s2^-1");
  auto p = make_dehornoy_cone(b);
  for (auto _ : state) benchmark::DoNotOptimize(p->sign(w));
}
BENCHMARK(BM_HandleReduction)->Arg(1)->Arg(2)->Arg(4);

static void BM_EnumerateTararin(benchmark::State& state) {
  auto g = make_tararin_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_finite_cones(g, 4, {}).size());
}
BENCHMARK(BM_EnumerateTararin)->DenseRange(1, 4);

static void BM_Normalize(benchmark::State& state) {
  auto f = make_free_group(2);
  const LTerm t = parse_term(f, "((a \\/ b) /\\ (a^-1 \\/ 1))^-1 * (b /\\ (a*b \\/ 1))");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t).rows.size());
}
BENCHMARK(BM_Normalize);
BENCHMARK_MAIN();
