#ifndef VWORD_WORD_HPP
#define VWORD_WORD_HPP

#include <string>
#include <string_view>
#include <vector>

namespace vword {

/// A word over a generating set, written left to right: the first letter
/// acts last on points (the action is a left action, applied right to
/// left).
using Word = std::vector<std::string>;

/// Splits on whitespace: "g1 g2  g1" -> [g1, g2, g1].
Word parse_word(std::string_view text);

/// One letter per character, for single-character generator names.
Word parse_word_compact(std::string_view text);

std::string format_word(const Word& w);

Word reverse_word(Word w);

}  // namespace vword

#endif  // VWORD_WORD_HPP
