#include <benchmark/benchmark.h>

#include "planar/symmetry.hpp"
#include "planar/tangle.hpp"

using namespace planar;

namespace {

BipartiteGraph graph_for(int which) {
  switch (which) {
    case 0: return build_graph(InclusionData::from_matrix({1}, IntMatrix::from_rows({{1, 1}})));
    case 1: return build_graph(InclusionData::from_matrix({1}, IntMatrix::from_rows({{1, 1, 1}})));
    default: return build_graph(InclusionData::from_matrix({1}, IntMatrix::from_rows({{2}})));
  }
}

void BM_EnumerateLoops(benchmark::State& state) {
  auto g = graph_for(static_cast<int>(state.range(0)));
  auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_loops(g, k));
  state.counters["loops"] = static_cast<double>(enumerate_loops(g, k).size());
}
BENCHMARK(BM_EnumerateLoops)->ArgsProduct({{0, 1, 2}, {2, 4, 6}});

// Square of a dense element of P_k.
void BM_MultiplyDense(benchmark::State& state) {
  auto g = graph_for(static_cast<int>(state.range(0)));
  auto k = static_cast<std::size_t>(state.range(1));
  PlanarElement x(k);
  long c = 1;
  for (const auto& loop : enumerate_loops(g, k)) x.add_term(loop, RadicalScalar(c++ % 7 + 1));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, x));
}
BENCHMARK(BM_MultiplyDense)->ArgsProduct({{0, 1, 2}, {2, 3, 4}});

void BM_TemperleyLiebTriple(benchmark::State& state) {
  auto g = graph_for(static_cast<int>(state.range(0)));
  auto e0 = include_to(g, jones_projection(g, 0), 3);
  auto e1 = jones_projection(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(multiply(e0, e1), e0));
}
BENCHMARK(BM_TemperleyLiebTriple)->DenseRange(0, 2);

void BM_CloseSymmetricGroup(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto g = build_graph(InclusionData::from_matrix(
      {1}, IntMatrix::from_rows({std::vector<std::uint64_t>(n, 1)})));
  std::vector<std::size_t> cycle(n), swap(n);
  for (std::size_t j = 0; j < n; ++j) {
    cycle[j] = (j + 1) % n;
    swap[j] = j;
  }
  std::swap(swap[0], swap[1]);
  std::vector<GraphAutomorphism> gens{make_automorphism(g, {0}, cycle),
                                      make_automorphism(g, {0}, swap)};
  for (auto _ : state) benchmark::DoNotOptimize(close_group(g, gens));
}
BENCHMARK(BM_CloseSymmetricGroup)->DenseRange(3, 6);

void BM_VerifySubalgebra(benchmark::State& state) {
  auto g = graph_for(0);
  auto group = close_group(g, {make_automorphism(g, {0}, {1, 0})});
  auto kmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_planar_subalgebra(group, kmax));
}
BENCHMARK(BM_VerifySubalgebra)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
