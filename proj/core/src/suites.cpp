#include "vword/suites.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "vword/decider.hpp"
#include "vword/lang_lab.hpp"
#include "vword/lz.hpp"
#include "vword/sampling.hpp"

namespace vword {

Report lemma_suite(const GeneratingSet& gamma, std::uint64_t seed) {
  Report report;
  std::mt19937_64 rng(seed);
  const std::size_t ml = static_cast<std::size_t>(gamma.maxlen());

  {
    int violations = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
      std::size_t len = 1 + rng() % 8;
      Word w = random_word(gamma, len, rng);
      Bitstring x0 = Bitstring::zeros(len * std::max<std::size_t>(ml, 1));
      NarrowPoint np = narrow_trace(gamma, w, x0);
      bool ok = np.zs[np.k].size() <= ml;
      // The suffix must be common and untouched: x_i = z_i·s throughout.
      for (std::size_t i = 0; ok && i < np.trace.points.size(); ++i) {
        ok = np.zs[i].concat(np.suffix) == np.trace.points[i];
      }
      if (!ok) {
        ++violations;
      }
    }
    std::ostringstream details;
    details << trials << " random traces, min|z_k| <= " << ml << ", "
            << violations << " violations";
    report.add("narrow-point", violations == 0, details.str());
  }

  {
    auto wp_words = enumerate_wp(gamma, 4);
    int violations = 0;
    for (const auto& u : wp_words) {
      for (const auto& v : wp_words) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        auto lhs = factor_wp(gamma, uv);
        auto rhs = factor_wp(gamma, u);
        auto rv = factor_wp(gamma, v);
        rhs.insert(rhs.end(), rv.begin(), rv.end());
        if (lhs != rhs) {
          ++violations;
        }
      }
    }
    std::ostringstream details;
    details << wp_words.size() * wp_words.size()
            << " concatenations, " << violations << " violations";
    report.add("unique-factorization", violations == 0, details.str());
  }

  report.add("bifix-code", check_bifix(gamma, 4),
             "free generators up to length 4");

  {
    std::vector<Word> sample;
    std::vector<std::string> names(gamma.names().begin(),
                                   gamma.names().begin() +
                                       std::min<std::size_t>(2, gamma.size()));
    Word w;
    // All words over the first <= 2 names, length <= 5.
    std::function<void(std::size_t)> gen = [&](std::size_t remaining) {
      sample.push_back(w);
      if (remaining == 0) {
        return;
      }
      for (const auto& name : names) {
        w.push_back(name);
        gen(remaining - 1);
        w.pop_back();
      }
    };
    gen(5);
    report.add("cyc-rev-commute", rev_cyc_commute_check(sample),
               std::to_string(sample.size()) + " words");
  }

  {
    auto wp_words = enumerate_wp(gamma, 4);
    int violations = 0;
    for (const auto& u : wp_words) {
      Word uu = u;
      uu.insert(uu.end(), u.begin(), u.end());
      if (!wp_oracle(gamma, uu)) {
        ++violations;
      }
    }
    report.add("wp-submonoid", violations == 0,
               std::to_string(wp_words.size()) + " squares checked");
  }

  return report;
}

Report oracle_agreement_suite(const GeneratingSet& gamma, int exhaustive_len,
                              int random_count, int random_max_len,
                              std::uint64_t seed) {
  Report report;

  {
    long long total = 0;
    long long disagreements = 0;
    for (int len = 0; len <= exhaustive_len; ++len) {
      for_each_word(gamma, static_cast<std::size_t>(len), [&](const Word& w) {
        ++total;
        if (wp_decide(gamma, w) != wp_oracle(gamma, w)) {
          ++disagreements;
        }
      });
    }
    std::ostringstream details;
    details << total << " words of length <= " << exhaustive_len << ", "
            << disagreements << " disagreements";
    report.add("decide-vs-oracle-exhaustive", disagreements == 0,
               details.str());
  }

  {
    std::mt19937_64 rng(seed);
    int disagreements = 0;
    for (int t = 0; t < random_count; ++t) {
      std::size_t len = 1 + rng() % static_cast<std::size_t>(random_max_len);
      Word w = random_word(gamma, len, rng);
      if (wp_decide(gamma, w) != wp_oracle(gamma, w)) {
        ++disagreements;
      }
    }
    std::ostringstream details;
    details << random_count << " random words of length <= " << random_max_len
            << ", " << disagreements << " disagreements";
    report.add("decide-vs-oracle-random", disagreements == 0, details.str());
  }

  {
    long long total = 0;
    long long disagreements = 0;
    int probe_len = std::min(exhaustive_len, 6);
    for (const auto& z : z_sweep(gamma)) {
      LzMachine machine(z, gamma);
      std::vector<int> input;
      for (int len = 1; len <= probe_len; ++len) {
        for_each_word(gamma, static_cast<std::size_t>(len),
                      [&](const Word& w) {
                        ++total;
                        auto indices = gamma.to_indices(w);
                        input.assign(indices.rbegin(), indices.rend());
                        input.push_back(machine.end_symbol());
                        bool recognized = machine.accepts_ids(input);
                        if (recognized != lz_direct(z, gamma, w)) {
                          ++disagreements;
                        }
                      });
      }
    }
    std::ostringstream details;
    details << total << " (z, word) pairs, " << disagreements
            << " disagreements";
    report.add("recognizer-vs-direct", disagreements == 0, details.str());
  }

  return report;
}

}  // namespace vword
