#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "regproc/semantics.hpp"

namespace regproc {

using StatePair = std::pair<StateId, StateId>;

struct BisimResult {
  bool bisimilar = false;
  // Block of every state of the disjoint union: states of the first automaton
  // come first, then those of the second offset by its state count.
  std::vector<std::size_t> partition;
  // Pairs (s, t) with s in the first and t in the second automaton sharing a
  // block. Empty unless bisimilar.
  std::vector<StatePair> witness_relation;
};

struct IsoResult {
  bool isomorphic = false;
  std::vector<StateId> mapping;  // first automaton -> second, when isomorphic
};

/// Coarsest bisimulation on the disjoint union of both automata, computed by
/// iterated signature refinement starting from the split by termination.
BisimResult bisimilar(const Automaton& a, const Automaton& b);

/// Coarsest bisimulation partition of a single automaton. Block ids are
/// numbered by first occurrence in state order.
std::vector<std::size_t> bisimulation_partition(const Automaton& a);

/// True iff `relation` is a bisimulation between `a` and `b` relating their
/// initial states.
bool check_bisimulation(const Automaton& a, const Automaton& b,
                        const std::vector<StatePair>& relation);

/// Bisimulation quotient, states renumbered breadth-first from the initial
/// block. Each block keeps the label of its lowest-numbered member.
Automaton minimize(const Automaton& a);

/// True iff `mapping` is a bijection from `a` to `b` preserving the initial
/// state, termination flags and labelled transitions in both directions.
bool check_isomorphism(const Automaton& a, const Automaton& b, const std::vector<StateId>& mapping);

/// Exact isomorphism test: colour refinement followed by backtracking that
/// tries candidates lowest index first.
IsoResult isomorphic(const Automaton& a, const Automaton& b);

}  // namespace regproc
