#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "regproc/equivalence.hpp"
#include "regproc/semantics.hpp"
#include "regproc/syntax.hpp"

namespace regproc {

/// Fresh control actions: `enter_<i>` lets component i take control and
/// `leave_<k>_<j>` hands it to component j performing action k.
struct ControlAlphabet {
  std::vector<Action> enter;                                       // by state
  std::map<std::pair<std::size_t, std::size_t>, Action> leave;     // by (k, j)
  ActionSet all;
};

struct EncodingResult {
  // encap_C(c_0 || c_1 || ... || c_n), left-associated, where c_i is the
  // component of state i and the initial state's component is primed.
  Expression expression;
  CommFn gamma;
  std::vector<Expression> components;  // p_0 .. p_n, unprimed
  Expression primed_initial;           // operational enter-successor of p_init
  std::vector<Action> actions;         // k -> a_k, sorted by name
  std::map<Action, std::size_t> action_index;
  ControlAlphabet control;
};

/// Encodes a finite automaton as a parallel composition with one component
/// per state. Throws InvalidAutomaton if some state is unreachable.
EncodingResult encode_fa(const Automaton& f);

/// Derives the automaton of the encoding and checks it is isomorphic to `f`;
/// the mapping sends states of `f` to derived states. Propagates
/// StateLimitExceeded.
IsoResult verify_encoding(const Automaton& f, std::size_t max_states = kDefaultMaxStates);

}  // namespace regproc
