#include "vword/lz.hpp"

#include <set>
#include <string>
#include <utility>

namespace vword {

namespace {

constexpr char kBottom = '$';
constexpr int kQ0 = 0;
constexpr int kQ1 = 1;
constexpr int kQa = 2;

// Strict prefixes x of dom code words with x·0^m back in the code for
// some m >= 1; m is unique because the code is a prefix code.
std::vector<std::pair<Bitstring, Bitstring>> zero_padded_entries(
    const TableElement& e) {
  std::set<std::string> strict_prefixes;
  std::set<std::string> code;
  for (const auto& entry : e.entries()) {
    code.insert(entry.dom.str());
    for (std::size_t len = 0; len < entry.dom.size(); ++len) {
      strict_prefixes.insert(entry.dom.str().substr(0, len));
    }
  }
  std::vector<std::pair<Bitstring, Bitstring>> out;
  for (const auto& x : strict_prefixes) {
    std::string padded = x;
    while (padded.size() <= static_cast<std::size_t>(e.maxlen())) {
      padded += '0';
      if (code.count(padded)) {
        Bitstring dom(padded);
        auto image = e.apply(dom);
        out.emplace_back(Bitstring(x), std::move(*image));
        break;
      }
    }
  }
  return out;
}

Dpda::Definition make_lz_definition(const Bitstring& z,
                                    const GeneratingSet& gamma,
                                    int end_symbol) {
  if (z.empty()) {
    throw InvalidZError("z must be a non-empty bitstring");
  }

  Dpda::Definition def;
  def.states = {"q0", "q1", "qa"};
  def.input_alphabet = gamma.names();
  def.input_alphabet.emplace_back(kEndmarkerName);
  def.stack_alphabet = std::string("01") + kBottom;
  def.bottom = kBottom;
  def.start_state = kQ0;
  def.start_stack = z.str() + kBottom;
  def.accept_states = {kQa};

  auto& ts = def.transitions;
  for (std::size_t g = 0; g < gamma.size(); ++g) {
    const TableElement& elem = gamma.generator(g);
    int label = static_cast<int>(g);
    if (elem.entries().size() == 1 && elem.entries().front().dom.empty()) {
      // Identity table {ε→ε}: applying it never changes the stack, but a
      // transition must still read one symbol to consume the letter.
      for (char c : def.stack_alphabet) {
        ts.push_back(
            Transition{kQ0, std::string(1, c), label, kQ0, std::string(1, c)});
      }
      continue;
    }
    // (a) simulate the action on a long enough stack.
    for (const auto& entry : elem.entries()) {
      ts.push_back(
          Transition{kQ0, entry.dom.str(), label, kQ0, entry.im.str()});
    }
    // (b) stack too short: act as if padded with zeros at the marker.
    for (const auto& [x, image] : zero_padded_entries(elem)) {
      ts.push_back(Transition{kQ0, x.str() + kBottom, label, kQ0,
                              image.str() + kBottom});
    }
  }

  // Endmarker checks, by cases on the stack height against |z|.
  // (c) whole stack s⊥ with |s| <= |z|: accept unless z = s·0^(|z|-|s|).
  for (const auto& s : Bitstring::all_up_to_length(z.size())) {
    if (z == s.append_zeros(z.size() - s.size())) {
      continue;  // equal streams: reject by having no transition
    }
    ts.push_back(
        Transition{kQ0, s.str() + kBottom, end_symbol, kQa, s.str() + kBottom});
  }
  for (const auto& s : Bitstring::all_of_length(z.size())) {
    for (char a : {'0', '1'}) {
      if (s == z) {
        // (e) z sits on top and the stack is strictly higher: pop z and
        // scan the tail for a 1.
        ts.push_back(Transition{kQ0, z.str() + a, end_symbol, kQ1,
                                std::string(1, a)});
      } else {
        // (d) stack strictly higher than |z| but z is not on top.
        ts.push_back(Transition{kQ0, s.str() + a, end_symbol, kQa,
                                std::string(1, a)});
      }
    }
  }
  // (f)+(g): pop zeros; the first 1 proves the tail non-zero.
  ts.push_back(Transition{kQ1, "0", kEpsilon, kQ1, ""});
  ts.push_back(Transition{kQ1, "1", kEpsilon, kQa, ""});

  return def;
}

}  // namespace

LzMachine::LzMachine(const Bitstring& z, const GeneratingSet& gamma)
    : z_(z),
      end_symbol_(static_cast<int>(gamma.size())),
      dpda_(make_lz_definition(z, gamma, static_cast<int>(gamma.size()))) {}

LzMachine build_lz(const Bitstring& z, const GeneratingSet& gamma) {
  return LzMachine(z, gamma);
}

bool in_lz(const Bitstring& z, const GeneratingSet& gamma, const Word& w) {
  if (w.empty()) {
    return false;
  }
  LzMachine machine(z, gamma);
  auto indices = gamma.to_indices(w);
  std::vector<int> input;
  input.reserve(indices.size() + 1);
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    input.push_back(static_cast<int>(*it));
  }
  input.push_back(machine.end_symbol());
  return machine.accepts_ids(input);
}

bool lz_direct(const Bitstring& z, const GeneratingSet& gamma, const Word& w) {
  if (z.empty()) {
    throw InvalidZError("z must be a non-empty bitstring");
  }
  if (w.empty()) {
    return false;
  }
  return neq_z0omega(apply_omega(gamma, w, z), z);
}

const LzMachine& LzCache::machine(const Bitstring& z) {
  auto it = machines_.find(z);
  if (it == machines_.end()) {
    it = machines_.emplace(z, std::make_unique<LzMachine>(z, *gamma_)).first;
  }
  return *it->second;
}

}  // namespace vword
