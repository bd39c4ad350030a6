// Microbenchmarks for the shortest-path kernels and the end-to-end
// solvers on generated instances. Times here are indicative, not gated;
// the `sdtp bench` subcommand is the harness for corpus-level studies.

#include <benchmark/benchmark.h>

#include "sdtp/distance_graph.hpp"
#include "sdtp/generators.hpp"
#include "sdtp/solvers.hpp"

namespace {

using namespace sdtp;

SdtpInstance make_rand(NodeId n) {
  GenConfig cfg;
  cfg.family = Family::Rand;
  cfg.n = n;
  cfg.m1 = static_cast<std::size_t>(n) * 6;
  cfg.k = 10;
  cfg.seed = 17;
  return generate_instance(cfg);
}

void bm_bellman_ford(benchmark::State& state) {
  const SdtpInstance inst = make_rand(static_cast<NodeId>(state.range(0)));
  const DistanceGraph g =
      DistanceGraph::build(inst, Direction::Direct, AlphaArcs::Both);
  SsspWorkspace ws;
  for (auto _ : state) {
    bellman_ford(g.csr(), 0, ws);
    benchmark::DoNotOptimize(ws.dist.data());
  }
}
BENCHMARK(bm_bellman_ford)->Arg(1000)->Arg(10000);

void bm_dijkstra(benchmark::State& state) {
  const SdtpInstance inst = make_rand(static_cast<NodeId>(state.range(0)));
  const DistanceGraph g =
      DistanceGraph::build(inst, Direction::Direct, AlphaArcs::Both);
  // Reweight by the Bellman-Ford potentials so every arc is nonnegative.
  SsspWorkspace bf;
  bellman_ford(g.csr(), 0, bf);
  Csr csr = g.csr();
  for (NodeId u = 0; u < csr.node_count(); ++u)
    for (std::int64_t a = csr.offset[u]; a < csr.offset[u + 1]; ++a)
      csr.arcs[a].weight += bf.dist[u] - bf.dist[csr.arcs[a].target];
  std::vector<Weight> dist;
  for (auto _ : state) {
    dijkstra(csr, 0, dist);
    benchmark::DoNotOptimize(dist.data());
  }
}
BENCHMARK(bm_dijkstra)->Arg(1000)->Arg(10000);

void bm_solver(benchmark::State& state, const char* alg) {
  const SdtpInstance inst = make_rand(static_cast<NodeId>(state.range(0)));
  for (auto _ : state) {
    const SolveOutcome out = solve_with(alg, inst, ScheduleKind::Earliest);
    benchmark::DoNotOptimize(out.schedule.data());
  }
}
BENCHMARK_CAPTURE(bm_solver, bfdc, "bfdc")->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(bm_solver, rult, "rult")->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(bm_solver, cra, "cra")->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(bm_solver, kaj, "kaj")->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
