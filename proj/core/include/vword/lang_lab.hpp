#ifndef VWORD_LANG_LAB_HPP
#define VWORD_LANG_LAB_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vword/bitstring.hpp"
#include "vword/generating_set.hpp"
#include "vword/word.hpp"

namespace vword {

class UndefinedStepError : public std::runtime_error {
 public:
  explicit UndefinedStepError(const std::string& message)
      : std::runtime_error(message) {}
};

class NotInWpError : public std::runtime_error {
 public:
  explicit NotInWpError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Step-by-step application of a word to a point: the intermediate
/// points x_0 … x_n and, per step, the generator applied and the length
/// of the dom code word it matched.
struct ComputationTrace {
  Bitstring x0;
  std::vector<Bitstring> points;                          // x_0 … x_n
  std::vector<std::pair<std::string, std::size_t>> steps;  // (name, depth)
};

/// Decomposition x_i = z_i·s with a common untouched suffix s of maximal
/// length; k is the first index minimizing |z_k|. At x_{k} the whole
/// modified prefix fits inside one generator table, so |z_k| <= maxlen —
/// the narrow point that makes the rotation sweep complete.
struct NarrowPoint {
  ComputationTrace trace;
  Bitstring suffix;             // s
  std::vector<Bitstring> zs;    // z_0 … z_n
  std::size_t k = 0;
};

/// Runs w on x0 and finds the narrow point. Throws UndefinedStepError if
/// an intermediate application is undefined (x0 shorter than the
/// |w|·maxlen guarantee) and std::logic_error if the narrow-point bound
/// |z_k| <= maxlen fails, which would contradict the prefix-code algebra.
NarrowPoint narrow_trace(const GeneratingSet& gamma, const Word& w,
                         const Bitstring& x0);

/// All identity words of length <= n, shortest first, lexicographic by
/// generator name within a length. Meant for desk-scale n.
std::vector<Word> enumerate_wp(const GeneratingSet& gamma, int n);

/// Unique factorization of an identity word into indecomposable identity
/// words, by greedily cutting the shortest non-empty identity prefix.
/// Throws NotInWpError when w is not an identity word.
std::vector<Word> factor_wp(const GeneratingSet& gamma, const Word& w);

/// Indecomposable identity words of length <= n (no proper non-empty
/// identity prefix).
std::vector<Word> free_generators_wp(const GeneratingSet& gamma, int n);

/// True iff no free generator up to length n is a prefix or a suffix of
/// another.
bool check_bifix(const GeneratingSet& gamma, int n);

/// All rotations of w, as a set.
std::set<Word> cyc_set(const Word& w);

/// Checks cyc(reverse(w)) = reverse of cyc(w), element-wise, over the
/// sample.
bool rev_cyc_commute_check(const std::vector<Word>& sample);

}  // namespace vword

#endif  // VWORD_LANG_LAB_HPP
