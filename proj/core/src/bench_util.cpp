#include "vword/bench_util.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "vword/decider.hpp"
#include "vword/sampling.hpp"

namespace vword {

namespace {

double time_decide(const GeneratingSet& gamma, const Word& w) {
  auto begin = std::chrono::steady_clock::now();
  volatile bool result = wp_decide(gamma, w);
  (void)result;
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - begin).count();
}

}  // namespace

BenchResult bench_wp_decide(const GeneratingSet& gamma,
                            const std::vector<std::size_t>& lengths,
                            int trials, std::uint64_t seed, BenchWords words) {
  if (!std::is_sorted(lengths.begin(), lengths.end())) {
    throw std::invalid_argument("bench lengths must be ascending");
  }
  BenchResult result;
  if (trials <= 0) {
    return result;
  }
  std::mt19937_64 rng(seed);
  auto make_word = [&](std::size_t len) {
    return words == BenchWords::kIdentity
               ? random_identity_word(gamma, len, rng)
               : random_word(gamma, len, rng);
  };
  for (std::size_t len : lengths) {
    time_decide(gamma, make_word(len));  // warmup, discarded
    std::vector<double> samples;
    samples.reserve(trials);
    for (int t = 0; t < trials; ++t) {
      samples.push_back(time_decide(gamma, make_word(len)));
    }
    std::sort(samples.begin(), samples.end());
    double mean = 0.0;
    for (double s : samples) {
      mean += s;
    }
    mean /= samples.size();
    double median = samples.size() % 2 == 1
                        ? samples[samples.size() / 2]
                        : 0.5 * (samples[samples.size() / 2 - 1] +
                                 samples[samples.size() / 2]);
    result.rows.push_back(BenchRow{len, trials, mean, median});
  }

  if (result.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = result.rows.size();
    for (const auto& row : result.rows) {
      double x = std::log(static_cast<double>(row.length));
      double y = std::log(row.median_seconds);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    result.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return result;
}

}  // namespace vword
