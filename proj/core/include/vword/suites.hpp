#ifndef VWORD_SUITES_HPP
#define VWORD_SUITES_HPP

#include <cstdint>

#include "vword/generating_set.hpp"
#include "vword/report.hpp"

namespace vword {

/// Desk-scale checks of the structural lemmas: narrow point, free-monoid
/// factorization, bifix code, cyc/rev algebra.
Report lemma_suite(const GeneratingSet& gamma, std::uint64_t seed = 2024);

/// Cross-checks the decision procedure against the table oracle
/// (exhaustively to `exhaustive_len`, then on seeded random words) and
/// the recognizer against the direct stream computation.
Report oracle_agreement_suite(const GeneratingSet& gamma,
                              int exhaustive_len = 6, int random_count = 1000,
                              int random_max_len = 40,
                              std::uint64_t seed = 2024);

}  // namespace vword

#endif  // VWORD_SUITES_HPP
