#include <benchmark/benchmark.h>

#include <random>

#include "vword/decider.hpp"
#include "vword/lz.hpp"
#include "vword/sampling.hpp"

namespace {

const vword::GeneratingSet& higman() {
  static const auto gs = vword::GeneratingSet::higman();
  return gs;
}

// Full sweep: identity words never exit early, so this is the quadratic
// worst case the decider is specified against.
void BM_DecideIdentityWord(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto w = vword::random_identity_word(higman(), state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vword::wp_decide(higman(), w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecideIdentityWord)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

// Typical case: a random word is witnessed almost immediately.
void BM_DecideRandomWord(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto w = vword::random_word(higman(), state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vword::wp_decide(higman(), w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecideRandomWord)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

// A single recognizer run, the decider's inner loop.
void BM_RecognizerRun(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto w = vword::random_identity_word(higman(), state.range(0), rng);
  vword::LzMachine machine(vword::Bitstring("00"), higman());
  auto indices = higman().to_indices(w);
  std::vector<int> input(indices.rbegin(), indices.rend());
  input.push_back(machine.end_symbol());
  for (auto _ : state) {
    benchmark::DoNotOptimize(machine.accepts_ids(input));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RecognizerRun)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

// Table composition on random products.
void BM_WordToElement(benchmark::State& state) {
  std::mt19937_64 rng(4);
  auto w = vword::random_word(higman(), state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vword::word_to_element(higman(), w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WordToElement)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
