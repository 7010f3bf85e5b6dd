#include "vword/sampling.hpp"

#include <stdexcept>

namespace vword {

Word random_word(const GeneratingSet& gamma, std::size_t length,
                 std::mt19937_64& rng) {
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(gamma.names()[rng() % gamma.size()]);
  }
  return w;
}

bool all_involutions(const GeneratingSet& gamma) {
  for (std::size_t g = 0; g < gamma.size(); ++g) {
    const TableElement& e = gamma.generator(g);
    if (!compose(e, e).is_identity()) {
      return false;
    }
  }
  return true;
}

Word random_identity_word(const GeneratingSet& gamma, std::size_t target,
                          std::mt19937_64& rng) {
  if (!all_involutions(gamma)) {
    throw std::invalid_argument(
        "identity words u·reverse(u) need a generating set of involutions");
  }
  Word half = random_word(gamma, target / 2, rng);
  Word w = half;
  w.insert(w.end(), half.rbegin(), half.rend());
  return w;
}

}  // namespace vword
