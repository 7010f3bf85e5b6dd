#include "vword/decider.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace vword {

Word rotate(const Word& w, std::size_t j) {
  if (j > w.size()) {
    throw std::out_of_range("rotation index exceeds word length");
  }
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + j, w.end());
  out.insert(out.end(), w.begin(), w.begin() + j);
  return out;
}

std::vector<Bitstring> z_sweep(const GeneratingSet& gamma) {
  return Bitstring::all_of_length(static_cast<std::size_t>(gamma.maxlen()));
}

namespace {

// Scans rotations [begin, begin+stride, ...) in (rotation, z) order and
// returns the smallest witness in its share. Rotations at or beyond a
// witness already found by another share cannot win the (rotation, z)
// tie-break, so they are skipped via `cutoff`.
std::optional<Witness> scan_rotations(
    const std::vector<const LzMachine*>& machines,
    const std::vector<int>& letter_ids, int end_symbol, std::size_t begin,
    std::size_t stride, std::atomic<std::size_t>& cutoff) {
  const std::size_t n = letter_ids.size();
  std::vector<int> input(n + 1);
  input[n] = end_symbol;
  for (std::size_t j = begin; j < n; j += stride) {
    if (j >= cutoff.load(std::memory_order_relaxed)) {
      break;
    }
    // Reverse of the rotation by j: position i holds w[(j + n-1-i) mod n].
    for (std::size_t i = 0; i < n; ++i) {
      input[i] = letter_ids[(j + n - 1 - i) % n];
    }
    for (const LzMachine* m : machines) {
      if (m->accepts_ids(input)) {
        std::size_t seen = cutoff.load(std::memory_order_relaxed);
        while (seen > j &&
               !cutoff.compare_exchange_weak(seen, j,
                                             std::memory_order_relaxed)) {
        }
        return Witness{j, m->z()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> cowp_decide(const GeneratingSet& gamma, const Word& w,
                                   const DecideOptions& options) {
  if (w.empty()) {
    return std::nullopt;
  }
  if (gamma.maxlen() == 0) {
    // Every generator is the identity, so every word is the identity.
    return std::nullopt;
  }

  std::vector<int> letter_ids;
  letter_ids.reserve(w.size());
  for (std::size_t idx : gamma.to_indices(w)) {
    letter_ids.push_back(static_cast<int>(idx));
  }

  LzCache cache(gamma);
  std::vector<const LzMachine*> machines;
  for (const auto& z : z_sweep(gamma)) {
    machines.push_back(&cache.machine(z));
  }
  const int end_symbol = machines.front()->end_symbol();

  unsigned threads = options.threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : options.threads;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, letter_ids.size()));

  std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
  if (threads <= 1) {
    return scan_rotations(machines, letter_ids, end_symbol, 0, 1, cutoff);
  }

  std::vector<std::optional<Witness>> found(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      found[t] =
          scan_rotations(machines, letter_ids, end_symbol, t, threads, cutoff);
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  std::optional<Witness> best;
  for (const auto& cand : found) {
    if (!cand) {
      continue;
    }
    if (!best || cand->rotation_index < best->rotation_index ||
        (cand->rotation_index == best->rotation_index && cand->z < best->z)) {
      best = cand;
    }
  }
  return best;
}

bool wp_decide(const GeneratingSet& gamma, const Word& w,
               const DecideOptions& options) {
  return !cowp_decide(gamma, w, options).has_value();
}

}  // namespace vword
