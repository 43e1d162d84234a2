#include <benchmark/benchmark.h>

#include <vector>

#include "atplanar/alon_tarsi.hpp"
#include "atplanar/decomposer.hpp"
#include "atplanar/gadgets.hpp"
#include "atplanar/testkit/testkit.hpp"

namespace {

using namespace atplanar;

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PlaneGraph pg = testkit::random_near_triangulation(n, 8, Seed{11});
  const auto& outer = pg.outer_face();
  for (auto _ : state) {
    Decomposition d = decompose(pg, outer[0], outer[1]);
    benchmark::DoNotOptimize(d.forest.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

void BM_EulerianDiff(benchmark::State& state) {
  const int arcs = static_cast<int>(state.range(0));
  Graph g = testkit::random_graph(9, 0.9, Seed{3});
  EdgeMask drop(g.edge_count());
  for (int e = arcs; e < g.edge_count(); ++e) drop.insert(e);
  g = g.without_edges(drop);
  Rng rng(Seed{5});
  const Orientation d = testkit::random_orientation(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_diff(d).diff());
}
BENCHMARK(BM_EulerianDiff)->DenseRange(12, 24, 4);

void BM_PolyCoefficient(benchmark::State& state) {
  const Graph g = testkit::random_graph(7, 0.6, Seed{9});
  Rng rng(Seed{1});
  const Orientation d = testkit::random_orientation(g, rng);
  const std::vector<int> eta = d.out_degrees();
  for (auto _ : state) benchmark::DoNotOptimize(poly_coefficient(g, eta));
}
BENCHMARK(BM_PolyCoefficient);

void BM_Lemma2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma2().cases_examined);
}
BENCHMARK(BM_Lemma2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
