#pragma once

#include <string>
#include <string_view>

#include "regproc/analysis.hpp"
#include "regproc/encoding.hpp"
#include "regproc/equivalence.hpp"
#include "regproc/semantics.hpp"
#include "regproc/syntax.hpp"

namespace regproc {

// Automaton JSON:
//   {"states": [{"id": 0, "label": "...", "terminating": false}, ...],
//    "initial": 0,
//    "transitions": [{"from": 0, "action": "a", "to": 1}, ...]}
// States are written in id order and transitions sorted by (from, action,
// to). `label` is optional on input.
std::string automaton_to_json(const Automaton& a);
// Throws FormatError.
Automaton automaton_from_json(std::string_view text);

// Terminating states are double circles; the initial state gets an arrow
// from an invisible point node.
std::string automaton_to_dot(const Automaton& a);

std::string to_string(Property p);

std::string report_to_json(const Automaton& a, const PropertyReport& r);
std::string report_to_text(const Automaton& a, const PropertyReport& r);

std::string scc_to_json(const Automaton& a, const SccDecomposition& d);
std::string scc_to_text(const Automaton& a, const SccDecomposition& d);

std::string bisim_to_json(const BisimResult& r);
std::string bisim_to_text(const BisimResult& r);

std::string iso_to_json(const IsoResult& r);
std::string iso_to_text(const IsoResult& r);

std::string comm_validation_to_json(const CommValidation& v);

// Outcome of verifying an encoding: the isomorphism plus both state counts.
std::string encoding_check_to_json(const IsoResult& r, std::size_t fa_states,
                                   std::size_t derived_states);
std::string encoding_check_to_text(const IsoResult& r, std::size_t fa_states,
                                   std::size_t derived_states);

// Maps state indices to their enter/leave names and actions to indices.
std::string encoding_manifest_json(const EncodingResult& e);

}  // namespace regproc
