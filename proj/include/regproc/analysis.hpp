#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "regproc/semantics.hpp"
#include "regproc/syntax.hpp"

namespace regproc {

/// Partition of the states into strongly connected components. Component ids
/// follow reverse topological order of the condensation: a component only
/// has edges into components with smaller ids.
struct SccDecomposition {
  std::vector<std::size_t> component_of;
  std::vector<std::vector<StateId>> members;  // each sorted ascending
  std::vector<bool> trivial;

  std::size_t size() const noexcept { return members.size(); }
  bool same_component(StateId a, StateId b) const {
    return component_of.at(a) == component_of.at(b);
  }
};

SccDecomposition scc_decompose(const Automaton& a);

/// normed[s] iff some terminating state is reachable from s.
std::vector<bool> normed_states(const Automaton& a);

struct ExitTransition {
  Action action;
  StateId target;

  friend bool operator==(const ExitTransition&, const ExitTransition&) = default;
  friend auto operator<=>(const ExitTransition&, const ExitTransition&) = default;
};

// Both return sorted, duplicate-free sets.
std::vector<ExitTransition> exit_transitions(const Automaton& a, const SccDecomposition& d,
                                             StateId s);
std::vector<ExitTransition> normed_exit_transitions(const Automaton& a,
                                                    const SccDecomposition& d, StateId s);
std::vector<ExitTransition> normed_exit_transitions(const Automaton& a,
                                                    const SccDecomposition& d,
                                                    const std::vector<bool>& normed, StateId s);

/// Members of component `scc` that terminate or have a normed exit transition.
std::vector<StateId> alive_exit_states(const Automaton& a, const SccDecomposition& d,
                                       std::size_t scc);
std::vector<StateId> alive_exit_states(const Automaton& a, const SccDecomposition& d,
                                       const std::vector<bool>& normed, std::size_t scc);

/// Structural measure that never increases along transitions of BPA and PA
/// expressions. Throws UnsupportedExpression on encapsulation.
std::size_t oc_measure(const Expression& e);

/// Same action, targets in the same component.
bool exit_equivalent(const ExitTransition& x, const ExitTransition& y, const SccDecomposition& d);

enum class Property { Bpa, Pa };

enum class WitnessKind {
  // Two alive exit states of a non-trivial component have different normed exits.
  NormedExitsDiffer,
  // Normed exits agree but the termination flags of alive exit states do not.
  TerminationDiffers,
  // No alive exit state covers the normed exits of all others modulo ~.
  NoMaximalAliveExitState,
};

struct ExitSet {
  StateId state;
  bool terminating;
  std::vector<ExitTransition> normed_exits;

  friend bool operator==(const ExitSet&, const ExitSet&) = default;
};

struct Witness {
  std::size_t scc;
  WitnessKind kind;
  std::vector<StateId> states;  // the alive exit states of the component
  std::vector<ExitSet> exit_sets;
};

struct PropertyReport {
  Property property;
  bool holds = true;
  std::vector<Witness> witnesses;
};

/// Necessary condition for BPA expressibility: in every non-trivial
/// component, all alive exit states share their normed exits (and their
/// termination flag).
PropertyReport check_bpa_property(const Automaton& a);

/// Necessary condition for PA expressibility: every component with an alive
/// exit state has a maximal one modulo ~.
PropertyReport check_pa_property(const Automaton& a);

PropertyReport check_property(const Automaton& a, Property p);

/// Recomputes a witness from scratch and confirms it demonstrates a failure.
bool confirm_witness(const Automaton& a, Property p, const Witness& w);

/// Deterministic random expression of depth <= max_depth over actions
/// {a,b,c,d}, using only the constructors of `theory` (BPA or PA).
Expression generate_random_expression(Theory theory, unsigned max_depth, std::uint64_t seed);

}  // namespace regproc
