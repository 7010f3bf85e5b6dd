#ifndef VWORD_SAMPLING_HPP
#define VWORD_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "vword/generating_set.hpp"
#include "vword/word.hpp"

namespace vword {

/// Uniform letters; uses the raw engine output so results are identical
/// across standard libraries.
Word random_word(const GeneratingSet& gamma, std::size_t length,
                 std::mt19937_64& rng);

bool all_involutions(const GeneratingSet& gamma);

/// A random identity word u·reverse(u) of length 2·⌊target/2⌋. Valid for
/// involution sets only (throws std::invalid_argument otherwise); these
/// words drive the decider through its full rotations × z sweep.
Word random_identity_word(const GeneratingSet& gamma, std::size_t target,
                          std::mt19937_64& rng);

/// All words of exactly the given length, lexicographic by name index;
/// calls fn(word) for each. Meant for desk-scale exhaustive checks.
template <typename Fn>
void for_each_word(const GeneratingSet& gamma, std::size_t length, Fn&& fn) {
  Word w(length);
  std::vector<std::size_t> odo(length, 0);
  while (true) {
    for (std::size_t i = 0; i < length; ++i) {
      w[i] = gamma.names()[odo[i]];
    }
    fn(std::as_const(w));
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < gamma.size()) {
        break;
      }
      odo[pos] = 0;
      if (pos == 0) {
        return;
      }
    }
    if (length == 0) {
      return;
    }
  }
}

}  // namespace vword

#endif  // VWORD_SAMPLING_HPP
