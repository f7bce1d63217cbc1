// Serial vs parallel bounded searches.

#include <benchmark/benchmark.h>

#include "dnacodec/dna.hpp"
#include "dnacodec/pcp.hpp"

using namespace dnacodec;

namespace {

const Alphabet kBin("01");

// The preserving machine of an unsolvable instance has no counterexample,
// so the whole word space up to the bound is scanned.
void BM_preserving_scan(benchmark::State& state) {
  Permutation mirror = Permutation::mirror(kBin);
  PreservingReduction pr = pcp_to_preserving_transducer(PcpInstance(kBin, {"0"}, {"1"}), mirror);
  const Execution ex = state.range(0) ? Execution::parallel : Execution::serial;
  const auto bound = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(bounded_counterexample(pr.transducer, mirror, ThetaMode::preserving, bound, ex));
}
BENCHMARK(BM_preserving_scan)->ArgsProduct({{0, 1}, {10, 12}})->Unit(benchmark::kMillisecond);

void BM_altering_scan(benchmark::State& state) {
  PropertyDescriptor d = dna_property("compliant", DnaVariant::normal);
  const Execution ex = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bounded_counterexample(d.transducer, d.theta, ThetaMode::altering, static_cast<std::size_t>(state.range(1)), ex));
}
BENCHMARK(BM_altering_scan)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_theta_pcp(benchmark::State& state) {
  ThetaPcpInstance r = reduce_to_theta_pcp(PcpInstance(kBin, {"0"}, {"1"}), Permutation::mirror(kBin));
  const Execution ex = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(r, static_cast<std::size_t>(state.range(1)), ex));
}
BENCHMARK(BM_theta_pcp)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
