#include "doctest.h"

#include <random>
#include <string>

#include "vword/bitstring.hpp"
#include "vword/generating_set.hpp"
#include "vword/sampling.hpp"
#include "vword/table_element.hpp"

using vword::Bitstring;
using vword::GeneratingSet;
using vword::TableElement;
using vword::TableEntry;
using vword::TableError;

namespace {

TableElement table(
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<TableEntry> entries;
  for (const auto& [d, i] : pairs) {
    entries.push_back(TableEntry{Bitstring(d), Bitstring(i)});
  }
  return TableElement::parse(entries);
}

std::string message_of(TableError::Kind kind,
                       std::initializer_list<std::pair<const char*, const char*>>
                           pairs) {
  std::vector<TableEntry> entries;
  for (const auto& [d, i] : pairs) {
    entries.push_back(TableEntry{Bitstring(d), Bitstring(i)});
  }
  try {
    TableElement::parse(entries);
  } catch (const TableError& e) {
    CHECK(e.kind() == kind);
    return e.what();
  }
  FAIL("expected a TableError");
  return {};
}

}  // namespace

TEST_CASE("parse accepts the documented examples") {
  TableElement swap01 = table({{"0", "1"}, {"1", "0"}});
  REQUIRE(swap01.size() == 2);
  CHECK(swap01.entries()[0].dom == Bitstring("0"));
  CHECK(swap01.entries()[0].im == Bitstring("1"));

  CHECK(table({{"", ""}}) == TableElement());

  // Sibling pair collapses to the identity.
  CHECK(table({{"0", "0"}, {"1", "1"}}) == TableElement());
}

TEST_CASE("parse rejects invalid tables and names the offender") {
  CHECK_THROWS_AS(TableElement::parse({}), std::invalid_argument);

  auto prefix_msg =
      message_of(TableError::Kind::NotPrefixCode, {{"0", "1"}, {"01", "0"}});
  CHECK(prefix_msg.find("\"0\"") != std::string::npos);
  CHECK(prefix_msg.find("\"01\"") != std::string::npos);

  auto maximal_msg =
      message_of(TableError::Kind::NotMaximal, {{"0", "1"}, {"10", "0"}});
  CHECK(maximal_msg.find("\"11\"") != std::string::npos);

  auto bijection_msg = message_of(TableError::Kind::NotBijection,
                                  {{"0", "10"}, {"0", "11"}, {"1", "0"}});
  CHECK(bijection_msg.find("\"0\"") != std::string::npos);

  // Bad im side is caught too.
  message_of(TableError::Kind::NotMaximal, {{"0", "0"}, {"1", "10"}});
  message_of(TableError::Kind::NotBijection,
             {{"00", "0"}, {"01", "0"}, {"1", "1"}});
}

TEST_CASE("reduce merges siblings until none remain") {
  auto reduced = TableElement::reduce({TableEntry{Bitstring("00"), Bitstring("10")},
                                       TableEntry{Bitstring("01"), Bitstring("11")},
                                       TableEntry{Bitstring("1"), Bitstring("0")}});
  CHECK(reduced == table({{"0", "1"}, {"1", "0"}}));

  // Idempotence on an already reduced table.
  auto g1 = table({{"0", "1"}, {"1", "0"}});
  CHECK(TableElement::reduce({g1.entries().begin(), g1.entries().end()}) == g1);

  // Cascading merges down to the identity.
  auto cascade =
      TableElement::reduce({TableEntry{Bitstring("00"), Bitstring("00")},
                            TableEntry{Bitstring("01"), Bitstring("01")},
                            TableEntry{Bitstring("1"), Bitstring("1")}});
  CHECK(cascade == TableElement());
}

TEST_CASE("reduce preserves the action on long points") {
  std::vector<TableEntry> unreduced{TableEntry{Bitstring("00"), Bitstring("10")},
                                    TableEntry{Bitstring("01"), Bitstring("11")},
                                    TableEntry{Bitstring("1"), Bitstring("0")}};
  TableElement before_view = TableElement::reduce(unreduced);  // {0→1,1→0}
  for (const auto& x : Bitstring::all_of_length(4)) {
    // Apply unreduced by hand.
    std::optional<Bitstring> raw;
    for (const auto& e : unreduced) {
      if (e.dom.is_prefix_of(x)) {
        raw = e.im.concat(x.suffix(e.dom.size()));
        break;
      }
    }
    REQUIRE(raw.has_value());
    CHECK(*raw == *before_view.apply(x));
  }
}

TEST_CASE("prefix action examples") {
  auto gs = GeneratingSet::higman();
  const auto& g1 = gs.generator("g1");
  const auto& g2 = gs.generator("g2");
  CHECK(*g1.apply(Bitstring("01")) == Bitstring("11"));
  CHECK(!g2.apply(Bitstring("0")).has_value());
  CHECK(*g2.apply(Bitstring("011")) == Bitstring("11"));

  auto with_depth = g2.apply_with_depth(Bitstring("011"));
  REQUIRE(with_depth.has_value());
  CHECK(with_depth->matched_depth == 2);
}

TEST_CASE("action is defined exactly beyond maxlen") {
  auto gs = GeneratingSet::higman();
  for (const auto& name : gs.names()) {
    const auto& e = gs.generator(name);
    for (const auto& x :
         Bitstring::all_of_length(static_cast<std::size_t>(e.maxlen()))) {
      CHECK(e.apply(x).has_value());
    }
  }
}

TEST_CASE("compose examples") {
  auto gs = GeneratingSet::higman();
  const auto& g1 = gs.generator("g1");
  const auto& g2 = gs.generator("g2");
  const auto& g3 = gs.generator("g3");

  CHECK(compose(g1, g1) == TableElement());
  CHECK(compose(TableElement(), g3) == g3);
  CHECK(compose(g3, TableElement()) == g3);

  // Against the direct two-step application on every point of length 4.
  auto h = compose(g2, g3);
  for (const auto& x : Bitstring::all_of_length(4)) {
    auto two_step = g2.apply(*g3.apply(x));
    REQUIRE(two_step.has_value());
    CHECK(*h.apply(x) == *two_step);
  }
}

TEST_CASE("associativity against the action, all generator pairs") {
  auto gs = GeneratingSet::higman();
  for (const auto& fn : gs.names()) {
    for (const auto& gn : gs.names()) {
      const auto& f = gs.generator(fn);
      const auto& g = gs.generator(gn);
      auto fg = compose(f, g);
      for (const auto& x : Bitstring::all_of_length(4)) {
        CHECK(*fg.apply(x) == *f.apply(*g.apply(x)));
      }
    }
  }
}

TEST_CASE("inverse examples") {
  auto gs = GeneratingSet::higman();
  const auto& g1 = gs.generator("g1");
  const auto& g2 = gs.generator("g2");
  CHECK(g1.inverse() == g1);
  CHECK(g2.inverse() == table({{"00", "00"}, {"1", "01"}, {"01", "1"}}));
  CHECK(TableElement().inverse() == TableElement());
}

TEST_CASE("identity test looks at every entry") {
  auto gs = GeneratingSet::higman();
  CHECK(TableElement().is_identity());
  CHECK(!gs.generator("g1").is_identity());
  CHECK(compose(gs.generator("g4"), gs.generator("g4")).is_identity());
}

TEST_CASE("maxlen examples") {
  auto gs = GeneratingSet::higman();
  CHECK(gs.generator("g1").maxlen() == 1);
  CHECK(TableElement().maxlen() == 0);
  CHECK(gs.maxlen() == 2);
}

TEST_CASE("random products: inverses cancel and maxlen stays bounded") {
  auto gs = GeneratingSet::higman();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t len = 1 + rng() % 8;
    vword::Word w = vword::random_word(gs, len, rng);
    TableElement e = vword::word_to_element(gs, w);
    CHECK(compose(e, e.inverse()).is_identity());
    CHECK(compose(e.inverse(), e).is_identity());
    CHECK(e.maxlen() <= static_cast<int>(len) * gs.maxlen());
  }
}
