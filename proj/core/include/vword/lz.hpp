#ifndef VWORD_LZ_HPP
#define VWORD_LZ_HPP

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "vword/bitstring.hpp"
#include "vword/dpda.hpp"
#include "vword/generating_set.hpp"
#include "vword/word.hpp"

namespace vword {

class InvalidZError : public std::runtime_error {
 public:
  explicit InvalidZError(const std::string& message)
      : std::runtime_error(message) {}
};

/// The recognizer for L_z = { w non-empty : w moves the stream z·0^ω },
/// as a dpda over states {q0, q1, qa} that accepts reverse(w)·□. The
/// stack simulates the action of the letters on z (padding with zeros at
/// the bottom marker when the stack is too short); on the endmarker the
/// machine checks that the stack content differs from z as a stream.
class LzMachine {
 public:
  LzMachine(const Bitstring& z, const GeneratingSet& gamma);

  const Bitstring& z() const noexcept { return z_; }
  const Dpda& dpda() const noexcept { return dpda_; }

  /// Input symbol ids: generator with index i in gamma.names() has id i.
  int end_symbol() const noexcept { return end_symbol_; }

  /// Raw run over symbol ids; the caller appends end_symbol() itself.
  bool accepts_ids(std::span<const int> input) const {
    return dpda_.accepts(input);
  }

 private:
  Bitstring z_;
  int end_symbol_;
  Dpda dpda_;
};

LzMachine build_lz(const Bitstring& z, const GeneratingSet& gamma);

/// Membership in L_z via the recognizer: runs reverse(w)·□. The empty
/// word is not in L_z by convention (the identity fixes every stream).
bool in_lz(const Bitstring& z, const GeneratingSet& gamma, const Word& w);

/// Independent route: computes w(z·0^k) with k = |w|·maxlen and compares
/// the result with z under trailing-zero equivalence.
bool lz_direct(const Bitstring& z, const GeneratingSet& gamma, const Word& w);

/// Builds each machine once per z and reuses it across queries.
class LzCache {
 public:
  explicit LzCache(const GeneratingSet& gamma) : gamma_(&gamma) {}

  const LzMachine& machine(const Bitstring& z);

 private:
  const GeneratingSet* gamma_;
  std::map<Bitstring, std::unique_ptr<LzMachine>> machines_;
};

}  // namespace vword

#endif  // VWORD_LZ_HPP
