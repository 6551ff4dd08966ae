#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regproc/syntax.hpp"

namespace regproc {

using StateId = std::uint32_t;

struct Transition {
  StateId from;
  Action action;
  StateId to;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite labelled transition system with a termination predicate and an
/// initial state. Transitions are kept sorted by (from, action, to) without
/// duplicates.
class Automaton {
 public:
  // Throws InvalidAutomaton on an empty state set or out-of-range indices.
  Automaton(std::size_t num_states, StateId initial, std::vector<Transition> transitions,
            std::vector<bool> terminating,
            std::vector<std::optional<std::string>> labels = {});

  std::size_t num_states() const noexcept { return terminating_.size(); }
  StateId initial() const noexcept { return initial_; }
  bool terminating(StateId s) const { return terminating_.at(s); }
  std::size_t num_terminating() const noexcept;

  const std::optional<std::string>& label(StateId s) const { return labels_.at(s); }
  // The label if present, `s<id>` otherwise.
  std::string display(StateId s) const;

  std::span<const Transition> transitions() const noexcept { return transitions_; }
  std::span<const Transition> out(StateId s) const;
  bool has_transition(StateId from, const Action& a, StateId to) const;

  ActionSet alphabet() const;
  // States reachable from the initial state.
  std::vector<bool> reachable() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  StateId initial_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
  std::vector<bool> terminating_;
  std::vector<std::optional<std::string>> labels_;
};

struct Step {
  Action action;
  Expression target;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Termination predicate of the operational rules.
bool terminates(const Expression& e);

/// All (a, e') with e -a-> e' derivable. The result has no duplicates; its
/// order is unspecified. Communication (and hence `g`) only matters for
/// parallel compositions.
std::vector<Step> step(const Expression& e, const CommFn& g);

inline constexpr std::size_t kDefaultMaxStates = 100000;

/// A derived automaton together with the expression behind every state.
struct StateSpace {
  Automaton automaton;
  std::vector<Expression> terms;
};

/// Breadth-first closure of `step` from `e`. States are numbered in
/// discovery order, exploring successors sorted by (action name, rendered
/// target). Throws StateLimitExceeded past `max_states` distinct states.
StateSpace explore(const Expression& e, const CommFn& g,
                   std::size_t max_states = kDefaultMaxStates);

Automaton derive_automaton(const Expression& e, const CommFn& g,
                           std::size_t max_states = kDefaultMaxStates);

}  // namespace regproc
