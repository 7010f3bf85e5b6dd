#include "vword/generating_set.hpp"

#include <algorithm>
#include <utility>

namespace vword {

GeneratingSet::GeneratingSet(std::map<std::string, TableElement> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("generating set needs at least one generator");
  }
  names_.reserve(generators.size());
  elements_.reserve(generators.size());
  for (auto& [name, elem] : generators) {
    if (name.empty()) {
      throw std::invalid_argument("generator names must be non-empty");
    }
    if (name == kEndmarkerName) {
      throw std::invalid_argument("generator name collides with the endmarker \"" +
                                  std::string(kEndmarkerName) + "\"");
    }
    maxlen_ = std::max(maxlen_, elem.maxlen());
    index_.emplace(name, names_.size());
    names_.push_back(name);
    elements_.push_back(std::move(elem));
  }
}

GeneratingSet GeneratingSet::higman() {
  auto table = [](std::initializer_list<std::pair<const char*, const char*>>
                      pairs) {
    std::vector<TableEntry> entries;
    for (const auto& [d, i] : pairs) {
      entries.push_back(TableEntry{Bitstring(d), Bitstring(i)});
    }
    return TableElement::parse(entries);
  };
  std::map<std::string, TableElement> gens;
  gens.emplace("g1", table({{"0", "1"}, {"1", "0"}}));
  gens.emplace("g2", table({{"00", "00"}, {"01", "1"}, {"1", "01"}}));
  gens.emplace("g3", table({{"0", "10"}, {"10", "0"}, {"11", "11"}}));
  gens.emplace("g4",
               table({{"00", "00"}, {"01", "10"}, {"10", "01"}, {"11", "11"}}));
  return GeneratingSet(std::move(gens));
}

const TableElement& GeneratingSet::generator(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) {
    throw UnknownGeneratorError(name);
  }
  return elements_[*idx];
}

const TableElement& GeneratingSet::generator(std::size_t index) const {
  return elements_.at(index);
}

std::optional<std::size_t> GeneratingSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<std::size_t> GeneratingSet::to_indices(const Word& w) const {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (const auto& letter : w) {
    auto idx = index_of(letter);
    if (!idx) {
      throw UnknownGeneratorError(letter);
    }
    out.push_back(*idx);
  }
  return out;
}

TableElement word_to_element(const GeneratingSet& gs, const Word& w) {
  TableElement acc;  // identity
  // Rightmost letter acts first: acc accumulates a_k ∘ … ∘ a_1.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    acc = compose(gs.generator(*it), acc);
  }
  return acc;
}

bool wp_oracle(const GeneratingSet& gs, const Word& w) {
  return word_to_element(gs, w).is_identity();
}

Bitstring apply_omega(const GeneratingSet& gs, const Word& w,
                      const Bitstring& z) {
  Bitstring x = z.append_zeros(w.size() * static_cast<std::size_t>(gs.maxlen()));
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto next = gs.generator(*it).apply(x);
    if (!next) {
      throw std::logic_error("padded point left the domain; maxlen bound broken");
    }
    x = std::move(*next);
  }
  return x.strip_trailing_zeros();
}

Bitstring apply_omega(const TableElement& e, const Bitstring& z) {
  auto img = e.apply(z.append_zeros(static_cast<std::size_t>(e.maxlen())));
  if (!img) {
    throw std::logic_error("padded point left the domain; maxlen bound broken");
  }
  return img->strip_trailing_zeros();
}

}  // namespace vword
