#ifndef VWORD_TABLE_ELEMENT_HPP
#define VWORD_TABLE_ELEMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vword/bitstring.hpp"

namespace vword {

/// One column pair of a table: the bijection sends the cone dom·{0,1}^ω
/// onto the cone im·{0,1}^ω by prefix replacement.
struct TableEntry {
  Bitstring dom;
  Bitstring im;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Raised when a list of pairs is not a valid table.
class TableError : public std::runtime_error {
 public:
  enum class Kind {
    NotPrefixCode,  // some code word is a prefix of another
    NotMaximal,     // some infinite branch misses every code word
    NotBijection,   // duplicated dom or im entry
  };

  TableError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An element of Thompson's group V: a bijection between two maximal
/// prefix codes of {0,1}*, stored reduced (no mergeable sibling pair
/// p0→q0, p1→q1 remains) and sorted by dom in shortlex order. Immutable.
class TableElement {
 public:
  /// The identity {ε→ε}.
  TableElement();

  /// Validates that doms and ims are maximal prefix codes in bijection,
  /// then reduces. Throws TableError (naming the offending entry) or
  /// std::invalid_argument for an empty list.
  static TableElement parse(const std::vector<TableEntry>& pairs);

  /// Reduction alone: merges sibling pairs until none remain. The input
  /// must satisfy every invariant except reducedness.
  static TableElement reduce(std::vector<TableEntry> entries);

  const std::vector<TableEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Partial prefix action on {0,1}*: if some dom is a prefix of x,
  /// rewrite it to the paired im; nullopt when x is too short.
  std::optional<Bitstring> apply(const Bitstring& x) const;

  struct Applied {
    Bitstring image;
    std::size_t matched_depth;  // length of the dom code word used
  };
  /// apply() plus the matched dom length, for computation traces.
  std::optional<Applied> apply_with_depth(const Bitstring& x) const;

  /// Column swap; the group inverse.
  TableElement inverse() const;

  /// True iff every entry maps a code word to itself.
  bool is_identity() const noexcept;

  /// Longest code word over dom ∪ im; 0 for the identity.
  int maxlen() const noexcept;

  friend bool operator==(const TableElement&, const TableElement&) = default;

 private:
  struct reduced_tag {};
  TableElement(std::vector<TableEntry> entries, reduced_tag);

  std::vector<TableEntry> entries_;
};

/// Composition f∘g (g acts first): apply(compose(f,g), x) equals
/// apply(f, apply(g, x)) whenever x is long enough for both sides.
/// Built by refining imC(g) against domC(f), then reducing.
TableElement compose(const TableElement& f, const TableElement& g);

}  // namespace vword

#endif  // VWORD_TABLE_ELEMENT_HPP
