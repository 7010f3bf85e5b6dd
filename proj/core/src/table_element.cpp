#include "vword/table_element.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace vword {

namespace {

void check_prefix_code(const std::vector<Bitstring>& code, const char* side) {
  // Duplicates are a bijection failure, reported before prefix analysis.
  std::set<std::string> seen;
  for (const auto& c : code) {
    if (!seen.insert(c.str()).second) {
      throw TableError(TableError::Kind::NotBijection,
                       std::string(side) + " entry \"" + c.str() +
                           "\" occurs more than once");
    }
  }
  for (const auto& a : code) {
    for (const auto& b : code) {
      if (&a != &b && a.is_prefix_of(b)) {
        throw TableError(TableError::Kind::NotPrefixCode,
                         std::string(side) + " entry \"" + a.str() +
                             "\" is a prefix of \"" + b.str() + "\"");
      }
    }
  }
}

// A finite prefix code is maximal iff in its trie every proper prefix of a
// code word has both children on some branch of the code. A missing child
// names an uncovered cone.
void check_maximal(const std::vector<Bitstring>& code, const char* side) {
  std::map<std::string, int> child_mask;  // proper prefix -> bits seen below
  for (const auto& c : code) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      child_mask[c.str().substr(0, i)] |= c.at(i) == '0' ? 1 : 2;
    }
  }
  if (code.size() == 1 && code.front().empty()) {
    return;  // {ε} is maximal
  }
  if (child_mask.find("") == child_mask.end()) {
    throw TableError(TableError::Kind::NotMaximal,
                     std::string(side) + " code covers nothing");
  }
  for (const auto& [prefix, mask] : child_mask) {
    if (mask != 3) {
      std::string missing = prefix + (mask == 1 ? '1' : '0');
      throw TableError(TableError::Kind::NotMaximal,
                       std::string(side) + " code covers no extension of \"" +
                           missing + "\"");
    }
  }
}

}  // namespace

TableElement::TableElement() : entries_{TableEntry{Bitstring(), Bitstring()}} {}

TableElement::TableElement(std::vector<TableEntry> entries, reduced_tag)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const TableEntry& a, const TableEntry& b) {
              return shortlex_less(a.dom, b.dom);
            });
}

TableElement TableElement::parse(const std::vector<TableEntry>& pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("table needs at least one entry");
  }
  std::vector<Bitstring> doms, ims;
  doms.reserve(pairs.size());
  ims.reserve(pairs.size());
  for (const auto& e : pairs) {
    doms.push_back(e.dom);
    ims.push_back(e.im);
  }
  check_prefix_code(doms, "dom");
  check_prefix_code(ims, "im");
  check_maximal(doms, "dom");
  check_maximal(ims, "im");
  return reduce(pairs);
}

TableElement TableElement::reduce(std::vector<TableEntry> entries) {
  std::map<std::string, Bitstring> table;  // dom -> im
  for (auto& e : entries) {
    table.emplace(e.dom.str(), std::move(e.im));
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (const auto& [dom, im] : table) {
      if (dom.empty() || dom.back() != '0' || im.empty() ||
          im.str().back() != '0') {
        continue;
      }
      std::string sibling = dom.substr(0, dom.size() - 1) + '1';
      auto it = table.find(sibling);
      if (it == table.end()) {
        continue;
      }
      const Bitstring& sib_im = it->second;
      if (sib_im.empty() || sib_im.str().back() != '1' ||
          sib_im.str().compare(0, sib_im.size() - 1, im.str(), 0,
                               im.size() - 1) != 0 ||
          sib_im.size() != im.size()) {
        continue;
      }
      Bitstring parent_im = im.prefix(im.size() - 1);
      std::string parent_dom = dom.substr(0, dom.size() - 1);
      table.erase(dom);
      table.erase(sibling);
      table.emplace(std::move(parent_dom), std::move(parent_im));
      merged = true;
      break;  // the map changed; restart the scan
    }
  }
  std::vector<TableEntry> out;
  out.reserve(table.size());
  for (auto& [dom, im] : table) {
    out.push_back(TableEntry{Bitstring(dom), im});
  }
  return TableElement(std::move(out), reduced_tag{});
}

std::optional<Bitstring> TableElement::apply(const Bitstring& x) const {
  auto r = apply_with_depth(x);
  if (!r) {
    return std::nullopt;
  }
  return std::move(r->image);
}

std::optional<TableElement::Applied> TableElement::apply_with_depth(
    const Bitstring& x) const {
  for (const auto& e : entries_) {
    if (e.dom.is_prefix_of(x)) {
      return Applied{e.im.concat(x.suffix(e.dom.size())), e.dom.size()};
    }
  }
  return std::nullopt;  // x is a strict prefix of some dom entry
}

TableElement TableElement::inverse() const {
  std::vector<TableEntry> swapped;
  swapped.reserve(entries_.size());
  for (const auto& e : entries_) {
    swapped.push_back(TableEntry{e.im, e.dom});
  }
  // Reduced tables stay reduced under the column swap.
  return TableElement(std::move(swapped), reduced_tag{});
}

bool TableElement::is_identity() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TableEntry& e) { return e.dom == e.im; });
}

int TableElement::maxlen() const noexcept {
  std::size_t m = 0;
  for (const auto& e : entries_) {
    m = std::max({m, e.dom.size(), e.im.size()});
  }
  return static_cast<int>(m);
}

TableElement compose(const TableElement& f, const TableElement& g) {
  std::vector<TableEntry> refined;
  for (const auto& ge : g.entries()) {
    for (const auto& fe : f.entries()) {
      if (ge.im.is_prefix_of(fe.dom)) {
        // f consumes g's output and more: g sends p·u into f's dom cone.
        Bitstring u = fe.dom.suffix(ge.im.size());
        refined.push_back(TableEntry{ge.dom.concat(u), fe.im});
      } else if (fe.dom.is_prefix_of(ge.im)) {
        Bitstring rest = ge.im.suffix(fe.dom.size());
        refined.push_back(TableEntry{ge.dom, fe.im.concat(rest)});
      }
      // Disjoint cones otherwise.
    }
  }
  return TableElement::reduce(std::move(refined));
}

}  // namespace vword
