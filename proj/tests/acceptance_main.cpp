// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is pinned: seeds, sizes, tolerances.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "vword/vword.hpp"

namespace {

int g_failures = 0;

void report(int number, bool passed, const std::string& name,
            const std::string& details) {
  std::printf("[%d/8] %s  %s (%s)\n", number, passed ? "PASS" : "FAIL",
              name.c_str(), details.c_str());
  if (!passed) {
    ++g_failures;
  }
}

void run(int number, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& criterion) {
  try {
    auto [passed, details] = criterion();
    report(number, passed, name, details);
  } catch (const std::exception& e) {
    report(number, false, name, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  const auto gs = vword::GeneratingSet::higman();
  using vword::Bitstring;
  using vword::Word;

  // 1. The decision procedure agrees with the table oracle: exhaustively
  //    on every non-empty word of length <= 6, then on 1000 seeded random
  //    words of length <= 40. Tolerance: zero disagreements.
  run(1, "decide agrees with the table oracle", [&] {
    long long exhaustive = 0;
    long long disagreements = 0;
    for (int len = 1; len <= 6; ++len) {
      vword::for_each_word(gs, len, [&](const Word& w) {
        ++exhaustive;
        if (vword::wp_decide(gs, w) != vword::wp_oracle(gs, w)) {
          ++disagreements;
        }
      });
    }
    bool counted = exhaustive == 5460;
    if (!vword::wp_decide(gs, Word{})) {
      ++disagreements;  // empty word is the identity
    }
    std::mt19937_64 rng(1009);
    for (int t = 0; t < 1000; ++t) {
      std::size_t len = 1 + rng() % 40;
      Word w = vword::random_word(gs, len, rng);
      if (vword::wp_decide(gs, w) != vword::wp_oracle(gs, w)) {
        ++disagreements;
      }
    }
    std::ostringstream d;
    d << exhaustive << " exhaustive words <= 6 plus 1000 random words <= 40, "
      << disagreements << " disagreements";
    return std::make_pair(disagreements == 0 && counted, d.str());
  });

  // 2. The recognizer and the direct stream computation agree for every
  //    z of length 2 and every non-empty word of length <= 6.
  run(2, "recognizer equals direct computation", [&] {
    long long total = 0;
    long long disagreements = 0;
    for (const auto& z : Bitstring::all_of_length(2)) {
      vword::LzMachine machine(z, gs);
      std::vector<int> input;
      for (int len = 1; len <= 6; ++len) {
        vword::for_each_word(gs, len, [&](const Word& w) {
          ++total;
          auto indices = gs.to_indices(w);
          input.assign(indices.rbegin(), indices.rend());
          input.push_back(machine.end_symbol());
          if (machine.accepts_ids(input) != vword::lz_direct(z, gs, w)) {
            ++disagreements;
          }
        });
      }
    }
    std::ostringstream d;
    d << total << " (z, word) pairs, " << disagreements << " disagreements";
    return std::make_pair(disagreements == 0 && total == 4 * 5460, d.str());
  });

  // 3. Static determinism for every machine with |z| <= 3; criteria 1-2
  //    double as the dynamic check, since a nondeterminism error would
  //    have surfaced as an exception there.
  run(3, "recognizers are statically deterministic", [&] {
    int machines = 0;
    int conflicts = 0;
    for (std::size_t len = 1; len <= 3; ++len) {
      for (const auto& z : Bitstring::all_of_length(len)) {
        ++machines;
        conflicts +=
            static_cast<int>(vword::LzMachine(z, gs).dpda()
                                 .validate_determinism()
                                 .size());
      }
    }
    std::ostringstream d;
    d << machines << " machines, " << conflicts << " conflicts";
    return std::make_pair(conflicts == 0, d.str());
  });

  // 4. Structural constants: maxlen 2, four z values, three states.
  run(4, "structural constants", [&] {
    bool maxlen_ok = gs.maxlen() == 2;
    bool sweep_ok = vword::z_sweep(gs).size() == 4;
    bool states_ok =
        vword::LzMachine(Bitstring("00"), gs).dpda().num_states() == 3;
    std::ostringstream d;
    d << "maxlen=" << gs.maxlen() << ", sweep=" << vword::z_sweep(gs).size()
      << ", states="
      << vword::LzMachine(Bitstring("00"), gs).dpda().num_states();
    return std::make_pair(maxlen_ok && sweep_ok && states_ok, d.str());
  });

  // 5. The decision is invariant under every rotation and under reversal,
  //    on 500 seeded random words of length <= 30.
  run(5, "rotation and reversal invariance", [&] {
    std::mt19937_64 rng(5005);
    int violations = 0;
    for (int t = 0; t < 500; ++t) {
      std::size_t len = 1 + rng() % 30;
      Word w = vword::random_word(gs, len, rng);
      bool base = vword::wp_decide(gs, w);
      for (std::size_t j = 1; j < w.size(); ++j) {
        if (vword::wp_decide(gs, vword::rotate(w, j)) != base) {
          ++violations;
        }
      }
      if (vword::wp_decide(gs, vword::reverse_word(w)) != base) {
        ++violations;
      }
    }
    std::ostringstream d;
    d << "500 words, every rotation plus reversal, " << violations
      << " violations";
    return std::make_pair(violations == 0, d.str());
  });

  // 6. Narrow point: on 500 seeded random traces with x0 = 0^(2|w|),
  //    the shortest modified prefix has length <= maxlen = 2.
  run(6, "narrow point bound", [&] {
    std::mt19937_64 rng(6006);
    int violations = 0;
    for (int t = 0; t < 500; ++t) {
      std::size_t len = 1 + rng() % 8;
      Word w = vword::random_word(gs, len, rng);
      auto np = vword::narrow_trace(gs, w, Bitstring::zeros(2 * len));
      if (np.zs[np.k].size() > 2) {
        ++violations;
      }
    }
    std::ostringstream d;
    d << "500 traces, |w| <= 8, " << violations << " violations";
    return std::make_pair(violations == 0, d.str());
  });

  // 7. Free-monoid structure: factorizations concatenate, and the free
  //    generators up to length 4 form a bifix code.
  run(7, "free monoid and bifix code", [&] {
    auto words = vword::enumerate_wp(gs, 4);
    int violations = 0;
    for (const auto& u : words) {
      for (const auto& v : words) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        auto joint = vword::factor_wp(gs, uv);
        auto expected = vword::factor_wp(gs, u);
        auto fv = vword::factor_wp(gs, v);
        expected.insert(expected.end(), fv.begin(), fv.end());
        if (joint != expected) {
          ++violations;
        }
      }
    }
    bool bifix = vword::check_bifix(gs, 4);
    std::ostringstream d;
    d << words.size() * words.size() << " concatenations, " << violations
      << " violations; bifix=" << (bifix ? "true" : "false");
    return std::make_pair(violations == 0 && bifix, d.str());
  });

  // 8. Quadratic scaling: log-log slope of the decision time on identity
  //    words (worst case: the sweep never exits early) for lengths
  //    128..4096 stays at most 2.3.
  run(8, "quadratic time scaling", [&] {
    auto result = vword::bench_wp_decide(
        gs, {128, 256, 512, 1024, 2048, 4096}, 3, 8008,
        vword::BenchWords::kIdentity);
    std::ostringstream d;
    d << "slope=" << result.slope << " over lengths 128..4096 (3 trials each)";
    return std::make_pair(result.slope <= 2.3 && result.rows.size() == 6,
                          d.str());
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
