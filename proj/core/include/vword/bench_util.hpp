#ifndef VWORD_BENCH_UTIL_HPP
#define VWORD_BENCH_UTIL_HPP

#include <cstdint>
#include <vector>

#include "vword/generating_set.hpp"

namespace vword {

enum class BenchWords {
  kIdentity,  // u·reverse(u): forces the full rotations × z sweep
  kRandom,    // uniform letters: usually exits at the first witness
};

struct BenchRow {
  std::size_t length = 0;
  int trials = 0;
  double mean_seconds = 0.0;
  double median_seconds = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// Least-squares slope of log(median time) against log(length);
  /// 0 when fewer than two rows were measured.
  double slope = 0.0;
};

/// Times wp_decide on seeded words per length, one warmup run discarded,
/// monotonic clock. `lengths` must be ascending.
BenchResult bench_wp_decide(const GeneratingSet& gamma,
                            const std::vector<std::size_t>& lengths,
                            int trials, std::uint64_t seed,
                            BenchWords words = BenchWords::kIdentity);

}  // namespace vword

#endif  // VWORD_BENCH_UTIL_HPP
