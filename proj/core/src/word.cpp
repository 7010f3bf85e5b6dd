#include "vword/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vword {

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string letter;
  while (in >> letter) {
    out.push_back(letter);
  }
  return out;
}

Word parse_word_compact(std::string_view text) {
  Word out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    out.emplace_back(1, c);
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += w[i];
  }
  return out;
}

Word reverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace vword
