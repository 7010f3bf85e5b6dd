#ifndef VWORD_GENERATING_SET_HPP
#define VWORD_GENERATING_SET_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vword/bitstring.hpp"
#include "vword/table_element.hpp"
#include "vword/word.hpp"

namespace vword {

/// Reserved input endmarker; generator names must not collide with it.
inline constexpr std::string_view kEndmarkerName = "#END#";

class UnknownGeneratorError : public std::runtime_error {
 public:
  explicit UnknownGeneratorError(std::string_view name)
      : std::runtime_error("unknown generator \"" + std::string(name) + "\"") {}
};

/// A named finite set of group elements. Names are kept in lexicographic
/// order; maxlen (longest code word over all tables) is cached.
class GeneratingSet {
 public:
  explicit GeneratingSet(std::map<std::string, TableElement> generators);

  /// The four involutions over two-level prefix codes that generate V.
  static GeneratingSet higman();

  std::size_t size() const noexcept { return names_.size(); }
  int maxlen() const noexcept { return maxlen_; }

  const std::vector<std::string>& names() const noexcept { return names_; }

  const TableElement& generator(std::string_view name) const;
  const TableElement& generator(std::size_t index) const;

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Letters of `w` as indices into names(); throws UnknownGeneratorError.
  std::vector<std::size_t> to_indices(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<TableElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  int maxlen_ = 0;
};

/// Folds the word into a single table, rightmost letter first; the empty
/// word gives the identity.
TableElement word_to_element(const GeneratingSet& gs, const Word& w);

/// Ground truth for the word problem: does w represent the identity?
bool wp_oracle(const GeneratingSet& gs, const Word& w);

/// Image of the eventually-zero stream z·0^ω under w, canonicalized by
/// stripping trailing zeros. Pads z with |w|·maxlen zeros so every
/// intermediate application is defined.
Bitstring apply_omega(const GeneratingSet& gs, const Word& w,
                      const Bitstring& z);

/// Same for a single element; pads by maxlen of the element.
Bitstring apply_omega(const TableElement& e, const Bitstring& z);

}  // namespace vword

#endif  // VWORD_GENERATING_SET_HPP
