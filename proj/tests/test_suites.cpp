#include "doctest.h"

#include "vword/suites.hpp"

TEST_CASE("built-in suites pass on the higman set") {
  auto gs = vword::GeneratingSet::higman();

  auto lemmas = vword::lemma_suite(gs);
  CHECK(lemmas.all_passed());
  CHECK(lemmas.checks().size() == 5);

  // Reduced sizes keep this quick; the acceptance binary runs the full
  // parameters.
  auto agreement = vword::oracle_agreement_suite(gs, 4, 100, 20);
  CHECK(agreement.all_passed());

  auto text = lemmas.to_text();
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("narrow-point") != std::string::npos);
  auto j = lemmas.to_json();
  CHECK(j["all_passed"] == true);
}
