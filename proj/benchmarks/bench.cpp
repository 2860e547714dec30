#include <benchmark/benchmark.h>

#include <random>

#include "wirekit/analyses.hpp"
#include "wirekit/claims.hpp"
#include "wirekit/generators.hpp"
#include "wirekit/semantics.hpp"

using namespace wirekit;

static void BM_ElaborateRipple(benchmark::State& state) {
  const Circuit c = gen::ripple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elaborate(c));
}
BENCHMARK(BM_ElaborateRipple)->RangeMultiplier(2)->Range(4, 64);

static void BM_ElaborateDc(benchmark::State& state) {
  const Circuit c = gen::dc(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elaborate(c));
}
BENCHMARK(BM_ElaborateDc)->DenseRange(1, 6);

static void BM_EvalRipple(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Simulator sim(elaborate(gen::ripple(n)));
  std::mt19937_64 rng(1);
  std::vector<bool> in(2 * n + 1);
  for (auto _ : state) {
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = rng() & 1U;
    benchmark::DoNotOptimize(sim.eval(in));
  }
}
BENCHMARK(BM_EvalRipple)->RangeMultiplier(2)->Range(4, 64);

static void BM_EvalStructuralRipple(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = gen::ripple(n);
  std::mt19937_64 rng(1);
  std::vector<bool> in(2 * n + 1);
  for (auto _ : state) {
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = rng() & 1U;
    benchmark::DoNotOptimize(eval_structural(c, BoolBundle(c.input_shape(), in)));
  }
}
BENCHMARK(BM_EvalStructuralRipple)->RangeMultiplier(2)->Range(4, 64);

static void BM_SimRegister(benchmark::State& state) {
  const std::size_t ticks = static_cast<std::size_t>(state.range(0));
  const Simulator sim(elaborate(gen::reg()));
  std::mt19937_64 rng(1);
  std::vector<BitTrace> in(2, BitTrace(ticks));
  for (auto& t : in) {
    for (std::size_t i = 0; i < ticks; ++i) t[i] = rng() & 1U;
  }
  for (auto _ : state) benchmark::DoNotOptimize(sim.run(in, ticks));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ticks));
}
BENCHMARK(BM_SimRegister)->RangeMultiplier(4)->Range(64, 4096);

static void BM_CheckDc3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_claim("dc_implements_dc", {{"k", "3"}}));
}
BENCHMARK(BM_CheckDc3)->Unit(benchmark::kMillisecond);

static void BM_CriticalPathDc(benchmark::State& state) {
  const Netlist nl = elaborate(gen::dc(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(critical_path(nl));
}
BENCHMARK(BM_CriticalPathDc)->DenseRange(1, 6);

static void BM_NetlistRoundTrip(benchmark::State& state) {
  const Netlist nl = elaborate(gen::dc(4));
  for (auto _ : state) benchmark::DoNotOptimize(from_netlist_file(to_netlist_file(nl)));
}
BENCHMARK(BM_NetlistRoundTrip);

BENCHMARK_MAIN();
