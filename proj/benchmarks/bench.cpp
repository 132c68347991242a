#include <benchmark/benchmark.h>

#include "slocc/classifier.hpp"
#include "slocc/ilo.hpp"
#include "slocc/verify.hpp"

using namespace slocc;

namespace {

PureState perturbed_theta(size_t m) {
  PureState s = make_canonical({Family::Theta4, m});
  return random_ilo(s.dims(), 17).apply(s);
}

void BM_Signature(benchmark::State& state) {
  PureState s = perturbed_theta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slocc_signature(s));
}
BENCHMARK(BM_Signature)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PencilProfile(benchmark::State& state) {
  PureState f = normal_frame(perturbed_theta(state.range(0))).state;
  Pencil p(f.slice(Party::A, 0), f.slice(Party::A, 1));
  for (auto _ : state) benchmark::DoNotOptimize(pencil_rank_profile(p));
}
BENCHMARK(BM_PencilProfile)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ClassifyNoProof(benchmark::State& state) {
  PureState s = perturbed_theta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s, {false}));
}
BENCHMARK(BM_ClassifyNoProof)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ClassifyWithProof(benchmark::State& state) {
  PureState s = perturbed_theta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s, {true}));
}
BENCHMARK(BM_ClassifyWithProof)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_AppendixDraws(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_appendix_theta45(state.range(0), 10, 1));
}
BENCHMARK(BM_AppendixDraws)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
