#include <benchmark/benchmark.h>

#include "snb/analysis.hpp"
#include "snb/digraph.hpp"
#include "snb/enumeration.hpp"
#include "snb/generators.hpp"
#include "snb/harness.hpp"

namespace {

void BM_SecondOut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  snb::Digraph d = snb::gen_random_oriented(n, 0.5, 7);
  for (auto _ : state) {
    for (int u = 0; u < n; ++u) {
      benchmark::DoNotOptimize(d.second_out(u));
    }
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SecondOut)->Arg(16)->Arg(64)->Arg(128);

void BM_TriangleStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  snb::Digraph d = snb::gen_random_oriented(n, 0.5, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snb::triangle_stats(d));
  }
}
BENCHMARK(BM_TriangleStats)->Arg(16)->Arg(64)->Arg(128);

void BM_TwoKings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  snb::Digraph t = snb::gen_random_tournament(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snb::two_kings(t));
  }
}
BENCHMARK(BM_TwoKings)->Arg(16)->Arg(64)->Arg(128);

void BM_DecodeOriented(benchmark::State& state) {
  std::uint64_t idx = 0;
  const std::uint64_t total = snb::oriented_count(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snb::decode_oriented(5, idx));
    idx = (idx + 9973) % total;
  }
}
BENCHMARK(BM_DecodeOriented);

void BM_ExhaustiveTtIdentity(benchmark::State& state) {
  snb::Domain domain = snb::Domain::oriented(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        snb::exhaustive_check(domain, snb::Predicate::TtIdentity, 1));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(domain.size()));
}
BENCHMARK(BM_ExhaustiveTtIdentity)->Arg(3)->Arg(4);

void BM_MonteCarloTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    snb::Digraph d = snb::gen_random_oriented(n, 0.5, ++seed);
    benchmark::DoNotOptimize(snb::is_two_king(d, 0));
  }
}
BENCHMARK(BM_MonteCarloTrial)->Arg(20)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
