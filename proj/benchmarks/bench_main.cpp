#include <benchmark/benchmark.h>

#include "hexagram/identities.hpp"
#include "hexagram/reconstruction.hpp"

namespace {

using namespace hexagram;

const SextupleParams& example() {
  static const SextupleParams p({7, -3, 2, 5, -4, 1});
  return p;
}

void BM_TransvectantQuartic(benchmark::State& state) {
  const Form g{Rational(1, 3), 2, Rational(-5, 7), 4, 9};
  const Form h{Rational(2, 9), -1, 3, Rational(7, 4), -6};
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transvectant(g, h, r));
}
BENCHMARK(BM_TransvectantQuartic)->DenseRange(0, 4);

void BM_FourSpecialPascals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(four_special_pascals(example()));
}
BENCHMARK(BM_FourSpecialPascals);

void BM_AllSixty(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_sixty(example()));
}
BENCHMARK(BM_AllSixty);

void BM_Reconstruct(benchmark::State& state) {
  const auto lines = four_special_pascals(example());
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(lines));
}
BENCHMARK(BM_Reconstruct);

void BM_VerifyChordIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(identities::verify_chord_identity());
}
BENCHMARK(BM_VerifyChordIdentity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
