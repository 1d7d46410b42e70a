#include <benchmark/benchmark.h>

#include "cardzk/applications.hpp"
#include "cardzk/bridges.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/subprotocols.hpp"
#include "cardzk/zk_audit.hpp"

using namespace cardzk;

namespace {

void BM_EncodeDecode(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int x = 0; x < k; ++x) {
      Sequence s = encode(x, k);
      benchmark::DoNotOptimize(decode(s));
    }
  }
  state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_EncodeDecode)->Arg(4)->Arg(9)->Arg(16);

void BM_NeighborCount(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RandomSource rs = RandomSource::seeded(seed++);
    Table table(rs, false);
    std::vector<Sequence> rows;
    for (int i = 0; i < m; ++i) rows.push_back(table.deal_encoding(i % k, k));
    CardMatrix mat = CardMatrix::from_rows(std::move(rows));
    benchmark::DoNotOptimize(neighbor_count(mat, table, "bench"));
  }
}
BENCHMARK(BM_NeighborCount)->Args({3, 4})->Args({5, 4})->Args({5, 9});

void BM_MultiplySequences(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RandomSource rs = RandomSource::seeded(seed++);
    Table table(rs, false);
    Sequence s = multiply_sequences(table.deal_encoding(2 % k, k),
                                    table.deal_encoding(k - 1, k), table, "bench");
    benchmark::DoNotOptimize(decode(s));
    table.release(std::move(s));
  }
}
BENCHMARK(BM_MultiplySequences)->Arg(3)->Arg(9);

void BM_SpanningVerify(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  EdgeFlags h(g.edge_count(), true);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RandomSource rs = RandomSource::seeded(seed++);
    Table table(rs, false);
    benchmark::DoNotOptimize(verify_spanning_honest(g, h, table));
  }
}
BENCHMARK(BM_SpanningVerify)->Arg(4)->Arg(8)->Arg(16)->Arg(32)
    ->Unit(benchmark::kMillisecond);

void BM_HamiltonianVerify(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  EdgeFlags h(g.edge_count(), true);
  std::vector<int> coloring = greedy_coloring(g);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RandomSource rs = RandomSource::seeded(seed++);
    Table table(rs, false);
    benchmark::DoNotOptimize(verify_hamiltonian(g, coloring, h, table));
  }
}
BENCHMARK(BM_HamiltonianVerify)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BridgesExample(benchmark::State& state) {
  BridgesInstance inst = example_instance();
  BridgesSolution sol = example_solution();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RandomSource rs = RandomSource::seeded(seed++);
    Table table(rs, false);
    benchmark::DoNotOptimize(verify_bridges(inst, sol, table));
  }
}
BENCHMARK(BM_BridgesExample)->Unit(benchmark::kMillisecond);

void BM_SoundnessSweep(benchmark::State& state) {
  Graph g = make_complete(static_cast<int>(state.range(0)));
  EdgeFlags h(g.edge_count(), false);  // empty H: rejected in round 1
  for (auto _ : state) {
    VerdictSweep vs = sweep_verdicts(spanning_run(g, h));
    benchmark::DoNotOptimize(vs.total_runs);
  }
}
BENCHMARK(BM_SoundnessSweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExactAudit(benchmark::State& state) {
  Graph g = make_path(static_cast<int>(state.range(0)));
  EdgeFlags h(g.edge_count(), true);
  for (auto _ : state) {
    ComparisonReport r = compare_exact(enumerate_factored(spanning_run(g, h)),
                                       enumerate_factored(spanning_simulator(g)));
    benchmark::DoNotOptimize(r.equal);
  }
}
BENCHMARK(BM_ExactAudit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
