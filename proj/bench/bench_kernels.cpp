// OpenMP kernels against their serial references.
//
//   bench_kernels --benchmark_filter=Cohomology

#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"
#include "toric/frobenius.hpp"
#include "toric/tilting.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace toric;

namespace {

const Variety& variety(const std::string& name) {
  static std::map<std::string, Variety> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, Variety(builtin(name).fan)).first;
  return it->second;
}

TorusDivisor twist(const Variety& x, long k) { return Integer(k) * canonical_divisor(x); }

void BM_Pushforward(benchmark::State& state) {
  const Variety& x = variety("P2xP2");
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_summands(x, x.zero_divisor(), state.range(0)));
}
void BM_PushforwardSerial(benchmark::State& state) {
  const Variety& x = variety("P2xP2");
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_summands_serial(x, x.zero_divisor(), state.range(0)));
}
BENCHMARK(BM_Pushforward)->Arg(4)->Arg(7);
BENCHMARK(BM_PushforwardSerial)->Arg(4)->Arg(7);

void BM_Cohomology(benchmark::State& state) {
  const Variety& x = variety("P1xdP6");
  const TorusDivisor d = twist(x, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(x, d));
}
void BM_CohomologySerial(benchmark::State& state) {
  const Variety& x = variety("P1xdP6");
  const TorusDivisor d = twist(x, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_serial(x, d));
}
BENCHMARK(BM_Cohomology)->Arg(-2)->Arg(2);
BENCHMARK(BM_CohomologySerial)->Arg(-2)->Arg(2);

void BM_Candidate(benchmark::State& state) {
  const Variety& x = variety("F1xF1");
  const auto bu = bu_set(x);
  for (auto _ : state) benchmark::DoNotOptimize(build_candidate(x, bu));
}
void BM_CandidateSerial(benchmark::State& state) {
  const Variety& x = variety("F1xF1");
  const auto bu = bu_set(x);
  for (auto _ : state) benchmark::DoNotOptimize(build_candidate_serial(x, bu));
}
BENCHMARK(BM_Candidate)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CandidateSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
