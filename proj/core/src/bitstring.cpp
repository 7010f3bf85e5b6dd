#include "vword/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace vword {

Bitstring::Bitstring(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may contain only '0'/'1', got \"" +
                                  std::string(bits) + "\"");
    }
  }
}

Bitstring Bitstring::zeros(std::size_t n) {
  return Bitstring(std::string(n, '0'), unchecked_tag{});
}

std::vector<Bitstring> Bitstring::all_of_length(std::size_t n) {
  if (n >= 8 * sizeof(std::size_t) - 1) {
    throw std::invalid_argument("bitstring enumeration length too large");
  }
  std::vector<Bitstring> out;
  out.reserve(std::size_t{1} << n);
  std::string word(n, '0');
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      word[i] = (v >> (n - 1 - i)) & 1 ? '1' : '0';
    }
    out.push_back(Bitstring(word, unchecked_tag{}));
  }
  return out;
}

std::vector<Bitstring> Bitstring::all_up_to_length(std::size_t n) {
  std::vector<Bitstring> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = all_of_length(len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Bitstring Bitstring::concat(const Bitstring& other) const {
  return Bitstring(bits_ + other.bits_, unchecked_tag{});
}

Bitstring Bitstring::append_zeros(std::size_t m) const {
  return Bitstring(bits_ + std::string(m, '0'), unchecked_tag{});
}

Bitstring Bitstring::prefix(std::size_t len) const {
  if (len > bits_.size()) {
    throw std::out_of_range("prefix length exceeds bitstring size");
  }
  return Bitstring(bits_.substr(0, len), unchecked_tag{});
}

Bitstring Bitstring::suffix(std::size_t from) const {
  if (from > bits_.size()) {
    throw std::out_of_range("suffix start exceeds bitstring size");
  }
  return Bitstring(bits_.substr(from), unchecked_tag{});
}

bool Bitstring::is_prefix_of(const Bitstring& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

Bitstring Bitstring::strip_trailing_zeros() const {
  std::size_t end = bits_.find_last_of('1');
  if (end == std::string::npos) {
    return Bitstring();
  }
  return Bitstring(bits_.substr(0, end + 1), unchecked_tag{});
}

bool Bitstring::all_zeros() const noexcept {
  return bits_.find('1') == std::string::npos;
}

bool shortlex_less(const Bitstring& a, const Bitstring& b) noexcept {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.str() < b.str();
}

bool neq_z0omega(const Bitstring& s, const Bitstring& z) {
  if (z.empty()) {
    throw std::invalid_argument("neq_z0omega requires non-empty z");
  }
  if (s.size() <= z.size()) {
    // Case 1: the streams agree iff z is exactly s padded with zeros.
    return z != s.append_zeros(z.size() - s.size());
  }
  if (!z.is_prefix_of(s)) {
    return true;  // case 2.1
  }
  // Case 2.2: s = z·t with t non-empty; unequal iff t is not all zeros.
  return s.suffix(z.size()).contains_one();
}

}  // namespace vword
