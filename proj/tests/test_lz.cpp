#include "doctest.h"

#include <algorithm>
#include <set>

#include "vword/lz.hpp"
#include "vword/sampling.hpp"

using vword::Bitstring;
using vword::GeneratingSet;
using vword::LzMachine;
using vword::Word;

namespace {

const GeneratingSet& higman() {
  static const auto gs = GeneratingSet::higman();
  return gs;
}

}  // namespace

TEST_CASE("machine shape: three states, one accept state") {
  LzMachine m(Bitstring("00"), higman());
  CHECK(m.dpda().num_states() == 3);
  CHECK(m.dpda().state_name(0) == "q0");
  CHECK(m.dpda().is_accept(2));
  CHECK(!m.dpda().is_accept(0));
  CHECK(!m.dpda().is_accept(1));
  // qa has no outgoing transitions.
  for (const auto& t : m.dpda().transitions()) {
    CHECK(t.from != 2);
  }
  // Endmarker is part of the input alphabet.
  CHECK(m.dpda().input_alphabet().back() == "#END#");
  CHECK_THROWS_AS(LzMachine(Bitstring(""), higman()), vword::InvalidZError);
}

TEST_CASE("read depth is the largest of |z|+1 and maxlen") {
  CHECK(LzMachine(Bitstring("0"), higman()).dpda().max_read_depth() == 2);
  CHECK(LzMachine(Bitstring("00"), higman()).dpda().max_read_depth() == 3);
  CHECK(LzMachine(Bitstring("010"), higman()).dpda().max_read_depth() == 4);
}

TEST_CASE("whole-stack endmarker family for z=00") {
  LzMachine m(Bitstring("00"), higman());
  int end = m.end_symbol();
  std::set<std::string> short_stack_reads;
  for (const auto& t : m.dpda().transitions()) {
    if (t.label == end && t.read.back() == '$') {
      CHECK(t.to == 2);
      CHECK(t.write == t.read);
      short_stack_reads.insert(t.read);
    }
  }
  // s ∈ {ε, 0, 00} pad to z itself and are excluded.
  CHECK(short_stack_reads ==
        std::set<std::string>{"1$", "01$", "10$", "11$"});
}

TEST_CASE("zero-padding family for g2") {
  LzMachine m(Bitstring("00"), higman());
  int g2 = *m.dpda().symbol_id("g2");
  std::set<std::pair<std::string, std::string>> padded;
  for (const auto& t : m.dpda().transitions()) {
    if (t.label == g2 && t.read.find('$') != std::string::npos) {
      padded.insert({t.read, t.write});
    }
  }
  // domC(g2) = {00, 01, 1}: ε pads to 00 (m=2), 0 pads to 00 (m=1).
  CHECK(padded == std::set<std::pair<std::string, std::string>>{
                      {"$", "00$"}, {"0$", "00$"}});
}

TEST_CASE("pop-z endmarker family") {
  LzMachine m(Bitstring("00"), higman());
  int end = m.end_symbol();
  int to_q1 = 0;
  int deep_to_qa = 0;
  for (const auto& t : m.dpda().transitions()) {
    if (t.label != end || t.read.back() == '$') {
      continue;
    }
    CHECK(t.read.size() == 3);
    CHECK(t.write == t.read.substr(2));
    if (t.to == 1) {
      ++to_q1;
      CHECK(t.read.substr(0, 2) == "00");
    } else {
      ++deep_to_qa;
    }
  }
  CHECK(to_q1 == 2);       // 00·a for a ∈ {0,1}
  CHECK(deep_to_qa == 6);  // s·a for s ≠ z
}

TEST_CASE("membership examples") {
  CHECK(vword::in_lz(Bitstring("00"), higman(), Word{"g1"}));
  CHECK(!vword::in_lz(Bitstring("00"), higman(), Word{"g1", "g1"}));
  CHECK(vword::in_lz(Bitstring("10"), higman(), Word{"g3"}));
  CHECK(!vword::in_lz(Bitstring("00"), higman(), Word{}));
}

TEST_CASE("direct computation examples") {
  CHECK(vword::lz_direct(Bitstring("00"), higman(), Word{"g1"}));
  CHECK(vword::lz_direct(Bitstring("11"), higman(), Word{"g2"}));
  CHECK(!vword::lz_direct(Bitstring("00"), higman(), Word{}));
  for (const auto& z : Bitstring::all_of_length(2)) {
    for (const auto& g : higman().names()) {
      CHECK(!vword::lz_direct(z, higman(), Word{g, g}));
    }
  }
}

TEST_CASE("recognizer equals direct computation, exhaustively to length 4") {
  for (const auto& z : Bitstring::all_of_length(2)) {
    LzMachine machine(z, higman());
    for (int len = 1; len <= 4; ++len) {
      vword::for_each_word(higman(), len, [&](const Word& w) {
        auto indices = higman().to_indices(w);
        std::vector<int> input(indices.rbegin(), indices.rend());
        input.push_back(machine.end_symbol());
        bool recognized = machine.accepts_ids(input);
        CHECK(recognized == vword::lz_direct(z, higman(), w));
        // Moving a point certifies the word is not the identity.
        if (recognized) {
          CHECK(!vword::wp_oracle(higman(), w));
        }
      });
    }
  }
}

TEST_CASE("the reverse of a member is a member, involution sets") {
  for (const auto& z : Bitstring::all_of_length(2)) {
    for (int len = 1; len <= 4; ++len) {
      vword::for_each_word(higman(), len, [&](const Word& w) {
        CHECK(vword::in_lz(z, higman(), w) ==
              vword::in_lz(z, higman(), vword::reverse_word(w)));
      });
    }
  }
}

TEST_CASE("determinism certificate for all short z") {
  for (std::size_t len = 1; len <= 3; ++len) {
    for (const auto& z : Bitstring::all_of_length(len)) {
      LzMachine m(z, higman());
      CHECK(m.dpda().validate_determinism().empty());
    }
  }
}

TEST_CASE("identity generators get explicit no-op transitions") {
  std::map<std::string, vword::TableElement> gens;
  gens.emplace("e", vword::TableElement());
  gens.emplace("s", higman().generator("g1"));
  GeneratingSet mixed(std::move(gens));
  CHECK(mixed.maxlen() == 1);

  LzMachine m(Bitstring("0"), mixed);
  CHECK(m.dpda().validate_determinism().empty());
  CHECK(vword::in_lz(Bitstring("0"), mixed, Word{"s"}));
  CHECK(!vword::in_lz(Bitstring("0"), mixed, Word{"e"}));
  CHECK(!vword::in_lz(Bitstring("0"), mixed, Word{"e", "e", "e"}));
  CHECK(vword::in_lz(Bitstring("0"), mixed, Word{"e", "s", "e"}));
  // Against the direct route on all short words.
  for (int len = 1; len <= 4; ++len) {
    vword::for_each_word(mixed, len, [&](const Word& w) {
      for (const auto& z : Bitstring::all_of_length(1)) {
        CHECK(vword::in_lz(z, mixed, w) == vword::lz_direct(z, mixed, w));
      }
    });
  }
}

TEST_CASE("machine cache builds each z once") {
  vword::LzCache cache(higman());
  const LzMachine& a = cache.machine(Bitstring("01"));
  const LzMachine& b = cache.machine(Bitstring("01"));
  CHECK(&a == &b);
  CHECK(a.z() == Bitstring("01"));
}
