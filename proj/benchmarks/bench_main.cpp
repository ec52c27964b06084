// Hull and hyperplane-enumeration timings.

#include <benchmark/benchmark.h>

#include "embform/experiments.hpp"
#include "embform/polyhedra.hpp"
#include "embform/pwl2d.hpp"
#include "embform/sos2.hpp"

namespace {

using namespace embform;

void BM_UnionJackHull(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  HullOptions opt;
  opt.adjacency = state.range(1) ? AdjacencyTest::algebraic : AdjacencyTest::combinatorial;
  const auto t = union_jack(m);
  const VRep v = pwl_embedding(t, jack_encoding(t));
  for (auto _ : state) benchmark::DoNotOptimize(vrep_to_hrep(v, opt));
  state.SetLabel(state.range(1) ? "algebraic" : "combinatorial");
}
BENCHMARK(BM_UnionJackHull)->Args({2, 0})->Args({2, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_Sos2Hull(benchmark::State& state) {
  HullOptions opt;
  opt.adjacency = state.range(1) ? AdjacencyTest::algebraic : AdjacencyTest::combinatorial;
  const VRep v = sos2_embedding(random_binary(static_cast<std::size_t>(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(vrep_to_hrep(v, opt));
  state.SetLabel(state.range(1) ? "algebraic" : "combinatorial");
}
BENCHMARK(BM_Sos2Hull)->Args({8, 0})->Args({8, 1})->Args({16, 0})->Args({16, 1})->Unit(benchmark::kMillisecond);

void BM_SpannedHyperplanes(benchmark::State& state) {
  const auto n = std::size_t{1} << state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sos2_general_size(random_binary(n, seed++)));
}
BENCHMARK(BM_SpannedHyperplanes)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ClosedFormBuild(benchmark::State& state) {
  const auto h = gray(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_sos2(h));
}
BENCHMARK(BM_ClosedFormBuild)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
