#ifndef VWORD_DECIDER_HPP
#define VWORD_DECIDER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vword/bitstring.hpp"
#include "vword/generating_set.hpp"
#include "vword/lz.hpp"
#include "vword/word.hpp"

namespace vword {

/// Proof that a word is not the identity: rotating it by rotation_index
/// gives a word that moves the stream z·0^ω.
struct Witness {
  std::size_t rotation_index = 0;
  Bitstring z;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct DecideOptions {
  /// 1 = sequential; 0 = one thread per hardware core. Any thread count
  /// returns the same witness (smallest (rotation_index, z) wins).
  unsigned threads = 1;
};

/// Moves the first j letters to the end; j may range from 0 to |w|.
Word rotate(const Word& w, std::size_t j);

/// All z values the decider sweeps: {0,1}^maxlen in lexicographic order.
std::vector<Bitstring> z_sweep(const GeneratingSet& gamma);

/// Word-problem complement: scans every rotation of w against every
/// recognizer with |z| = maxlen. Returns the first witness in
/// (rotation, z) order, or nullopt when no rotation moves any z·0^ω —
/// which, by the narrow-point argument, happens exactly when w is the
/// identity. O(|w|²) for a fixed generating set.
std::optional<Witness> cowp_decide(const GeneratingSet& gamma, const Word& w,
                                   const DecideOptions& options = {});

/// The quadratic-time word problem: true iff cowp_decide finds nothing.
bool wp_decide(const GeneratingSet& gamma, const Word& w,
               const DecideOptions& options = {});

}  // namespace vword

#endif  // VWORD_DECIDER_HPP
