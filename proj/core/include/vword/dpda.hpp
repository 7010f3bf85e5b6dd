#ifndef VWORD_DPDA_HPP
#define VWORD_DPDA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace vword {

/// Input label for ε-transitions.
inline constexpr int kEpsilon = -1;

class PdaError : public std::runtime_error {
 public:
  enum class Kind {
    Nondeterminism,     // two transitions applicable in one configuration
    EpsilonDivergence,  // ε-chain exceeded its budget
  };

  PdaError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A generalized transition: in `from`, with `read` on top of the stack
/// (top-first, never empty) and `label` as next input letter (or ε),
/// replace `read` by `write` and move to `to`.
struct Transition {
  int from = 0;
  std::string read;
  int label = kEpsilon;  // index into the input alphabet, or kEpsilon
  int to = 0;
  std::string write;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Snapshot of a run: current state, stack written top-first (always
/// ending in the bottom marker), input letters consumed so far.
struct Configuration {
  int state = 0;
  std::string stack;
  std::size_t consumed = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A pair of transitions that could fire in the same configuration.
struct DeterminismConflict {
  std::size_t first;
  std::size_t second;

  friend bool operator==(const DeterminismConflict&,
                         const DeterminismConflict&) = default;
};

struct RunResult {
  bool accepted = false;
  std::vector<Configuration> trace;
};

struct RunOptions {
  bool record_trace = false;
  /// Fixed ε-chain budget; by default each chain gets
  /// |stack| + |states| + 1 steps. VWORD_EPS_BUDGET overrides the default.
  std::optional<std::size_t> epsilon_budget;
};

/// Deterministic push-down automaton with prefix-rewriting transitions,
/// a bottom marker and acceptance by final state after the whole input.
/// Immutable once constructed; runs share no state.
class Dpda {
 public:
  struct Definition {
    std::vector<std::string> states;
    std::vector<std::string> input_alphabet;
    std::string stack_alphabet;  // one char per symbol, bottom included
    char bottom = '$';
    std::vector<Transition> transitions;
    int start_state = 0;
    std::string start_stack;  // top-first, must end in `bottom`
    std::vector<int> accept_states;
  };

  /// Validates the structure, including the bottom-marker discipline:
  /// reads ending in the marker write the marker back at the end, reads
  /// avoiding it write marker-free words. Throws std::invalid_argument.
  explicit Dpda(Definition def);

  std::size_t num_states() const noexcept { return def_.states.size(); }
  const std::string& state_name(int q) const { return def_.states.at(q); }
  const std::vector<std::string>& input_alphabet() const noexcept {
    return def_.input_alphabet;
  }
  const std::string& stack_alphabet() const noexcept {
    return def_.stack_alphabet;
  }
  char bottom() const noexcept { return def_.bottom; }
  const std::vector<Transition>& transitions() const noexcept {
    return def_.transitions;
  }
  int start_state() const noexcept { return def_.start_state; }
  const std::string& start_stack() const noexcept { return def_.start_stack; }
  bool is_accept(int q) const { return accept_mask_.at(q); }
  /// Longest read prefix over all transitions.
  std::size_t max_read_depth() const noexcept { return max_read_depth_; }

  std::optional<int> symbol_id(std::string_view symbol) const;

  /// Every pair of transitions with the same source whose read prefixes
  /// are comparable and whose labels can fire together (equal, or either
  /// is ε). Empty result certifies static determinism.
  std::vector<DeterminismConflict> validate_determinism() const;

  /// One move from `c`: the unique applicable transition, matching the
  /// next letter or ε. nullopt when the machine is stuck. Throws
  /// PdaError(Nondeterminism) if two transitions apply.
  std::optional<Configuration> step(const Configuration& c,
                                    std::optional<int> next_letter) const;

  Configuration start_configuration() const;

  /// Runs the whole input: alternating ε-chains and letter steps.
  /// Accepted iff the input is consumed entirely and an accept state
  /// appears in the ε-chain after the last letter.
  RunResult run(std::span<const int> input, RunOptions options = {}) const;

  bool accepts(std::span<const int> input) const;
  /// Convenience for symbol names; throws on unknown symbols.
  bool accepts(const std::vector<std::string>& letters) const;

  nlohmann::ordered_json to_json() const;
  static Dpda from_json(const nlohmann::json& j);
  std::string to_dot() const;

 private:
  const std::vector<int>& candidates(int state, int label) const;
  bool read_matches(const Transition& t, const std::string& rstack) const;

  Definition def_;
  std::vector<bool> accept_mask_;
  std::size_t max_read_depth_ = 0;
  // (state, label+1) -> indices of transitions, label -1 = ε at slot 0.
  std::vector<std::vector<int>> dispatch_;
  std::vector<std::string> write_rev_;  // per transition, write reversed
};

}  // namespace vword

#endif  // VWORD_DPDA_HPP
