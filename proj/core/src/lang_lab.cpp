#include "vword/lang_lab.hpp"

#include <algorithm>
#include <limits>

namespace vword {

NarrowPoint narrow_trace(const GeneratingSet& gamma, const Word& w,
                         const Bitstring& x0) {
  NarrowPoint np;
  np.trace.x0 = x0;
  np.trace.points.push_back(x0);

  Bitstring x = x0;
  std::size_t untouched = x0.size();  // common untouched suffix length
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto applied = gamma.generator(*it).apply_with_depth(x);
    if (!applied) {
      throw UndefinedStepError("generator \"" + *it +
                               "\" undefined on point \"" + x.str() +
                               "\"; x0 shorter than |w|·maxlen");
    }
    untouched = std::min(untouched, x.size() - applied->matched_depth);
    np.trace.steps.emplace_back(*it, applied->matched_depth);
    x = std::move(applied->image);
    np.trace.points.push_back(x);
  }

  np.suffix = x0.suffix(x0.size() - untouched);
  np.zs.reserve(np.trace.points.size());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < np.trace.points.size(); ++i) {
    const Bitstring& xi = np.trace.points[i];
    np.zs.push_back(xi.prefix(xi.size() - untouched));
    if (np.zs.back().size() < best) {
      best = np.zs.back().size();
      np.k = i;
    }
  }
  if (!w.empty() &&
      best > static_cast<std::size_t>(gamma.maxlen())) {
    throw std::logic_error("narrow point exceeds maxlen; table algebra broken");
  }
  return np;
}

namespace {

void collect_wp(const GeneratingSet& gamma, int remaining, Word& prefix,
                const TableElement& elem,
                std::vector<std::vector<Word>>& by_length) {
  if (elem.is_identity()) {
    by_length[prefix.size()].push_back(prefix);
  }
  if (remaining == 0) {
    return;
  }
  for (const auto& name : gamma.names()) {
    prefix.push_back(name);
    // The new letter acts first on points, i.e. sits rightmost:
    // element(prefix·a) = element(prefix) ∘ a.
    collect_wp(gamma, remaining - 1, prefix,
               compose(elem, gamma.generator(name)), by_length);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_wp(const GeneratingSet& gamma, int n) {
  if (n < 0 || n > 12) {
    throw std::invalid_argument("enumerate_wp is meant for small lengths");
  }
  // One DFS carrying the running product; bucketing by length makes the
  // result shortlex-ordered (the DFS already visits each length in
  // lexicographic order).
  std::vector<std::vector<Word>> by_length(static_cast<std::size_t>(n) + 1);
  Word prefix;
  collect_wp(gamma, n, prefix, TableElement(), by_length);
  std::vector<Word> out;
  for (auto& bucket : by_length) {
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

std::vector<Word> factor_wp(const GeneratingSet& gamma, const Word& w) {
  if (!wp_oracle(gamma, w)) {
    throw NotInWpError("word \"" + format_word(w) +
                       "\" does not represent the identity");
  }
  std::vector<Word> factors;
  std::size_t start = 0;
  TableElement acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc = compose(acc, gamma.generator(w[i]));
    if (acc.is_identity()) {
      factors.emplace_back(w.begin() + start, w.begin() + i + 1);
      start = i + 1;
      acc = TableElement();
    }
  }
  // w is an identity word, so the running product must close at the end.
  return factors;
}

std::vector<Word> free_generators_wp(const GeneratingSet& gamma, int n) {
  std::vector<Word> frees;
  for (const auto& w : enumerate_wp(gamma, n)) {
    if (w.empty()) {
      continue;
    }
    // Indecomposable iff the greedy factorization is the word itself.
    if (factor_wp(gamma, w).size() == 1) {
      frees.push_back(w);
    }
  }
  return frees;
}

bool check_bifix(const GeneratingSet& gamma, int n) {
  auto frees = free_generators_wp(gamma, n);
  auto is_prefix = [](const Word& a, const Word& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  };
  auto is_suffix = [](const Word& a, const Word& b) {
    return a.size() <= b.size() &&
           std::equal(a.rbegin(), a.rend(), b.rbegin());
  };
  for (std::size_t i = 0; i < frees.size(); ++i) {
    for (std::size_t j = 0; j < frees.size(); ++j) {
      if (i == j) {
        continue;
      }
      if (is_prefix(frees[i], frees[j]) || is_suffix(frees[i], frees[j])) {
        return false;
      }
    }
  }
  return true;
}

std::set<Word> cyc_set(const Word& w) {
  std::set<Word> out;
  if (w.empty()) {
    out.insert(w);
    return out;
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    Word rot;
    rot.reserve(w.size());
    rot.insert(rot.end(), w.begin() + j, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + j);
    out.insert(std::move(rot));
  }
  return out;
}

bool rev_cyc_commute_check(const std::vector<Word>& sample) {
  for (const auto& w : sample) {
    std::set<Word> lhs = cyc_set(reverse_word(w));
    std::set<Word> rhs;
    for (const auto& u : cyc_set(w)) {
      rhs.insert(reverse_word(u));
    }
    if (lhs != rhs) {
      return false;
    }
  }
  return true;
}

}  // namespace vword
