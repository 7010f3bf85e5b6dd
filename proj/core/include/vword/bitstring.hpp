#ifndef VWORD_BITSTRING_HPP
#define VWORD_BITSTRING_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vword {

/// A finite word over {0,1}. Used both as a point prefix of the Cantor
/// space and as pda stack content (without the bottom marker).
class Bitstring {
 public:
  Bitstring() = default;

  /// Throws std::invalid_argument if `bits` contains anything but '0'/'1'.
  explicit Bitstring(std::string_view bits);

  static Bitstring zeros(std::size_t n);

  /// All bitstrings of the given length, in lexicographic order.
  static std::vector<Bitstring> all_of_length(std::size_t n);

  /// All bitstrings of length <= n, shortest first, lexicographic within
  /// a length.
  static std::vector<Bitstring> all_up_to_length(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char at(std::size_t i) const { return bits_.at(i); }
  const std::string& str() const noexcept { return bits_; }

  Bitstring concat(const Bitstring& other) const;
  Bitstring append_zeros(std::size_t m) const;

  /// First `len` symbols; `len` must not exceed size().
  Bitstring prefix(std::size_t len) const;
  /// Everything after the first `from` symbols.
  Bitstring suffix(std::size_t from) const;

  bool is_prefix_of(const Bitstring& other) const noexcept;

  Bitstring strip_trailing_zeros() const;
  bool all_zeros() const noexcept;
  bool contains_one() const noexcept { return !all_zeros(); }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  /// Plain lexicographic order (z-sweep order).
  friend auto operator<=>(const Bitstring&, const Bitstring&) = default;

 private:
  struct unchecked_tag {};
  Bitstring(std::string bits, unchecked_tag) : bits_(std::move(bits)) {}

  std::string bits_;
};

/// Length-first (shortlex) order; table entries are kept sorted this way.
bool shortlex_less(const Bitstring& a, const Bitstring& b) noexcept;

/// Decides s·0^ω ≠ z·0^ω by the three-case analysis on |s| vs |z|:
/// either s, padded with zeros to |z|, differs from z; or z is not a
/// prefix of s; or s = z·t with t containing a 1.
/// Equivalent to strip_trailing_zeros comparison; both are kept and
/// cross-checked in tests. Throws std::invalid_argument for empty z.
bool neq_z0omega(const Bitstring& s, const Bitstring& z);

}  // namespace vword

#endif  // VWORD_BITSTRING_HPP
