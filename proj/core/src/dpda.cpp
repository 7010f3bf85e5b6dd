#include "vword/dpda.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace vword {

namespace {

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

// Testing hook: VWORD_EPS_BUDGET fixes the per-chain ε budget.
std::optional<std::size_t> env_epsilon_budget() {
  static const std::optional<std::size_t> value = [] {
    const char* raw = std::getenv("VWORD_EPS_BUDGET");
    if (!raw || !*raw) {
      return std::optional<std::size_t>{};
    }
    return std::optional<std::size_t>{std::strtoull(raw, nullptr, 10)};
  }();
  return value;
}

bool labels_can_fire_together(int a, int b) {
  return a == b || a == kEpsilon || b == kEpsilon;
}

bool is_string_prefix(const std::string& a, const std::string& b) {
  return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

void check_marker_word(const std::string& word, char bottom,
                       const std::string& what) {
  auto pos = word.find(bottom);
  if (pos != std::string::npos && pos + 1 != word.size()) {
    throw std::invalid_argument(what + " may contain the bottom marker only at "
                                       "the deepest position");
  }
}

}  // namespace

Dpda::Dpda(Definition def) : def_(std::move(def)) {
  if (def_.states.empty()) {
    throw std::invalid_argument("dpda needs at least one state");
  }
  if (def_.stack_alphabet.find(def_.bottom) == std::string::npos) {
    throw std::invalid_argument("stack alphabet must contain the bottom marker");
  }
  auto check_state = [&](int q, const char* what) {
    if (q < 0 || static_cast<std::size_t>(q) >= def_.states.size()) {
      throw std::invalid_argument(std::string(what) + " out of range");
    }
  };
  auto check_stack_word = [&](const std::string& w, const char* what) {
    for (char c : w) {
      if (def_.stack_alphabet.find(c) == std::string::npos) {
        throw std::invalid_argument(std::string(what) +
                                    " uses a symbol outside the stack alphabet");
      }
    }
  };

  check_state(def_.start_state, "start state");
  check_stack_word(def_.start_stack, "start stack");
  if (def_.start_stack.empty() || def_.start_stack.back() != def_.bottom) {
    throw std::invalid_argument("start stack must end in the bottom marker");
  }
  check_marker_word(def_.start_stack, def_.bottom, "start stack");

  for (const auto& t : def_.transitions) {
    check_state(t.from, "transition source");
    check_state(t.to, "transition target");
    if (t.read.empty()) {
      throw std::invalid_argument("transition read prefix must be non-empty");
    }
    check_stack_word(t.read, "transition read prefix");
    check_stack_word(t.write, "transition write prefix");
    check_marker_word(t.read, def_.bottom, "transition read prefix");
    check_marker_word(t.write, def_.bottom, "transition write prefix");
    bool reads_bottom = t.read.back() == def_.bottom;
    bool writes_bottom = !t.write.empty() && t.write.back() == def_.bottom;
    if (reads_bottom != writes_bottom) {
      throw std::invalid_argument(
          "bottom-marker discipline violated: a transition must preserve the "
          "marker exactly when it reads it");
    }
    if (t.label != kEpsilon &&
        (t.label < 0 ||
         static_cast<std::size_t>(t.label) >= def_.input_alphabet.size())) {
      throw std::invalid_argument("transition label out of range");
    }
    max_read_depth_ = std::max(max_read_depth_, t.read.size());
  }

  accept_mask_.assign(def_.states.size(), false);
  for (int q : def_.accept_states) {
    check_state(q, "accept state");
    accept_mask_[q] = true;
  }

  dispatch_.assign(def_.states.size() * (def_.input_alphabet.size() + 1), {});
  write_rev_.reserve(def_.transitions.size());
  for (std::size_t i = 0; i < def_.transitions.size(); ++i) {
    const auto& t = def_.transitions[i];
    dispatch_[t.from * (def_.input_alphabet.size() + 1) + (t.label + 1)]
        .push_back(static_cast<int>(i));
    write_rev_.push_back(reversed(t.write));
  }
}

std::optional<int> Dpda::symbol_id(std::string_view symbol) const {
  for (std::size_t i = 0; i < def_.input_alphabet.size(); ++i) {
    if (def_.input_alphabet[i] == symbol) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

const std::vector<int>& Dpda::candidates(int state, int label) const {
  return dispatch_[state * (def_.input_alphabet.size() + 1) + (label + 1)];
}

bool Dpda::read_matches(const Transition& t, const std::string& rstack) const {
  if (t.read.size() > rstack.size()) {
    return false;
  }
  for (std::size_t i = 0; i < t.read.size(); ++i) {
    if (rstack[rstack.size() - 1 - i] != t.read[i]) {
      return false;
    }
  }
  return true;
}

std::vector<DeterminismConflict> Dpda::validate_determinism() const {
  std::vector<DeterminismConflict> conflicts;
  const auto& ts = def_.transitions;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (ts[i].from != ts[j].from) {
        continue;
      }
      if (!labels_can_fire_together(ts[i].label, ts[j].label)) {
        continue;
      }
      if (is_string_prefix(ts[i].read, ts[j].read) ||
          is_string_prefix(ts[j].read, ts[i].read)) {
        conflicts.push_back(DeterminismConflict{i, j});
      }
    }
  }
  return conflicts;
}

Configuration Dpda::start_configuration() const {
  return Configuration{def_.start_state, def_.start_stack, 0};
}

std::optional<Configuration> Dpda::step(const Configuration& c,
                                        std::optional<int> next_letter) const {
  std::string rstack = reversed(c.stack);
  const Transition* found = nullptr;
  auto scan = [&](const std::vector<int>& list) {
    for (int ti : list) {
      const Transition& t = def_.transitions[ti];
      if (!read_matches(t, rstack)) {
        continue;
      }
      if (found) {
        throw PdaError(PdaError::Kind::Nondeterminism,
                       "two transitions applicable in state " +
                           def_.states[c.state] + " on stack " + c.stack);
      }
      found = &t;
    }
  };
  scan(candidates(c.state, kEpsilon));
  if (next_letter) {
    scan(candidates(c.state, *next_letter));
  }
  if (!found) {
    return std::nullopt;
  }
  rstack.resize(rstack.size() - found->read.size());
  rstack += reversed(found->write);
  bool consumed_letter = found->label != kEpsilon;
  return Configuration{found->to, reversed(rstack),
                       c.consumed + (consumed_letter ? 1 : 0)};
}

RunResult Dpda::run(std::span<const int> input, RunOptions options) const {
  RunResult result;
  std::string rstack = reversed(def_.start_stack);
  int state = def_.start_state;
  std::size_t consumed = 0;

  auto snapshot = [&] {
    if (options.record_trace) {
      result.trace.push_back(Configuration{state, reversed(rstack), consumed});
    }
  };
  snapshot();

  std::optional<std::size_t> fixed_budget =
      options.epsilon_budget ? options.epsilon_budget : env_epsilon_budget();
  std::size_t eps_run = 0;
  std::size_t chain_budget = 0;

  while (true) {
    if (consumed == input.size() && accept_mask_[state]) {
      result.accepted = true;
      return result;
    }
    const Transition* found = nullptr;
    auto scan = [&](const std::vector<int>& list) {
      for (int ti : list) {
        const Transition& t = def_.transitions[ti];
        if (!read_matches(t, rstack)) {
          continue;
        }
        if (found) {
          throw PdaError(PdaError::Kind::Nondeterminism,
                         "two transitions applicable in state " +
                             def_.states[state] + " on stack " +
                             reversed(rstack));
        }
        found = &t;
      }
    };
    scan(candidates(state, kEpsilon));
    if (consumed < input.size()) {
      scan(candidates(state, input[consumed]));
    }
    if (!found) {
      return result;  // stuck; accepted only if already returned above
    }
    if (found->label == kEpsilon) {
      if (eps_run == 0) {
        chain_budget = fixed_budget
                           ? *fixed_budget
                           : rstack.size() + def_.states.size() + 1;
      }
      if (++eps_run > chain_budget) {
        throw PdaError(PdaError::Kind::EpsilonDivergence,
                       "ε-chain exceeded its budget of " +
                           std::to_string(chain_budget) + " steps");
      }
    } else {
      eps_run = 0;
      ++consumed;
    }
    std::size_t ti = static_cast<std::size_t>(found - def_.transitions.data());
    rstack.resize(rstack.size() - found->read.size());
    rstack += write_rev_[ti];
    state = found->to;
    snapshot();
  }
}

bool Dpda::accepts(std::span<const int> input) const {
  return run(input, RunOptions{}).accepted;
}

bool Dpda::accepts(const std::vector<std::string>& letters) const {
  std::vector<int> ids;
  ids.reserve(letters.size());
  for (const auto& name : letters) {
    auto id = symbol_id(name);
    if (!id) {
      throw std::invalid_argument("symbol \"" + name +
                                  "\" is not in the input alphabet");
    }
    ids.push_back(*id);
  }
  return accepts(std::span<const int>(ids));
}

nlohmann::ordered_json Dpda::to_json() const {
  nlohmann::ordered_json j;
  j["states"] = def_.states;
  j["input_alphabet"] = def_.input_alphabet;
  auto alphabet = nlohmann::ordered_json::array();
  for (char c : def_.stack_alphabet) {
    alphabet.push_back(std::string(1, c));
  }
  j["stack_alphabet"] = alphabet;
  j["bottom"] = std::string(1, def_.bottom);
  auto transitions = nlohmann::ordered_json::array();
  for (const auto& t : def_.transitions) {
    nlohmann::ordered_json tj;
    tj["from"] = def_.states[t.from];
    tj["read"] = t.read;
    tj["label"] = t.label == kEpsilon
                      ? nlohmann::ordered_json(nullptr)
                      : nlohmann::ordered_json(def_.input_alphabet[t.label]);
    tj["to"] = def_.states[t.to];
    tj["write"] = t.write;
    transitions.push_back(std::move(tj));
  }
  j["transitions"] = std::move(transitions);
  j["start_state"] = def_.states[def_.start_state];
  j["start_stack"] = def_.start_stack;
  auto accepts = nlohmann::ordered_json::array();
  for (std::size_t q = 0; q < def_.states.size(); ++q) {
    if (accept_mask_[q]) {
      accepts.push_back(def_.states[q]);
    }
  }
  j["accept"] = std::move(accepts);
  return j;
}

Dpda Dpda::from_json(const nlohmann::json& j) {
  Definition def;
  def.states = j.at("states").get<std::vector<std::string>>();
  def.input_alphabet = j.at("input_alphabet").get<std::vector<std::string>>();
  for (const auto& s : j.at("stack_alphabet")) {
    auto sym = s.get<std::string>();
    if (sym.size() != 1) {
      throw std::invalid_argument("stack symbols must be single characters");
    }
    def.stack_alphabet += sym;
  }
  auto bottom = j.at("bottom").get<std::string>();
  if (bottom.size() != 1) {
    throw std::invalid_argument("bottom marker must be a single character");
  }
  def.bottom = bottom[0];

  std::unordered_map<std::string, int> state_ids;
  for (std::size_t q = 0; q < def.states.size(); ++q) {
    if (!state_ids.emplace(def.states[q], static_cast<int>(q)).second) {
      throw std::invalid_argument("duplicate state name \"" + def.states[q] +
                                  "\"");
    }
  }
  std::unordered_map<std::string, int> symbol_ids;
  for (std::size_t a = 0; a < def.input_alphabet.size(); ++a) {
    if (!symbol_ids.emplace(def.input_alphabet[a], static_cast<int>(a)).second) {
      throw std::invalid_argument("duplicate input symbol \"" +
                                  def.input_alphabet[a] + "\"");
    }
  }
  auto state_of = [&](const nlohmann::json& v) {
    auto it = state_ids.find(v.get<std::string>());
    if (it == state_ids.end()) {
      throw std::invalid_argument("unknown state \"" + v.get<std::string>() +
                                  "\"");
    }
    return it->second;
  };

  for (const auto& tj : j.at("transitions")) {
    Transition t;
    t.from = state_of(tj.at("from"));
    t.to = state_of(tj.at("to"));
    t.read = tj.at("read").get<std::string>();
    t.write = tj.at("write").get<std::string>();
    const auto& label = tj.at("label");
    if (label.is_null()) {
      t.label = kEpsilon;
    } else {
      auto it = symbol_ids.find(label.get<std::string>());
      if (it == symbol_ids.end()) {
        throw std::invalid_argument("unknown input symbol \"" +
                                    label.get<std::string>() + "\"");
      }
      t.label = it->second;
    }
    def.transitions.push_back(std::move(t));
  }
  def.start_state = state_of(j.at("start_state"));
  def.start_stack = j.at("start_stack").get<std::string>();
  for (const auto& q : j.at("accept")) {
    def.accept_states.push_back(state_of(q));
  }
  return Dpda(std::move(def));
}

std::string Dpda::to_dot() const {
  std::ostringstream out;
  out << "digraph dpda {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t q = 0; q < def_.states.size(); ++q) {
    out << "  \"" << def_.states[q] << "\" [shape="
        << (accept_mask_[q] ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> \"" << def_.states[def_.start_state] << "\" [label=\""
      << def_.start_stack << "\"];\n";
  for (const auto& t : def_.transitions) {
    out << "  \"" << def_.states[t.from] << "\" -> \"" << def_.states[t.to]
        << "\" [label=\""
        << (t.label == kEpsilon ? std::string("eps")
                                : def_.input_alphabet[t.label])
        << " : " << t.read << "/" << (t.write.empty() ? "-" : t.write)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vword
