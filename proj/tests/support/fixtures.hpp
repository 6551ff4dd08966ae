#pragma once
// Fixtures: expressions plus hand-coded automata.

#include <fstream>
#include <sstream>
#include <string>

#include "regproc/io.hpp"
#include "regproc/semantics.hpp"
#include "regproc/syntax.hpp"

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must be defined"
#endif

namespace fixtures {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline regproc::Automaton load(const std::string& name) {
  return regproc::automaton_from_json(read_fixture(name));
}

inline constexpr const char* kFig1 = "1.(a.(a+1))*.b";
inline constexpr const char* kFig2 = "1.(a.b.(c+1))*.d";
inline constexpr const char* kFig3 = "1.(a.(b.0+1))*.c";
inline constexpr const char* kFig4 = "1.(a.b)* || c";
inline constexpr const char* kFig6 = "1.(a.b)*.d || c";
inline constexpr const char* kCycleCounter = "(a.(b + b.b))*.d";
inline constexpr const char* kExitCounter = "(a.b)* || c";

inline regproc::CommFn gamma_bc_e() {
  regproc::CommFn g;
  g.define(regproc::Action("b"), regproc::Action("c"), regproc::Action("e"));
  return g;
}

inline regproc::Automaton derive(const char* text, const regproc::CommFn& g = {}) {
  return regproc::derive_automaton(regproc::parse_expression(text), g);
}

inline regproc::Automaton hand(std::size_t n, std::vector<regproc::Transition> t,
                               std::vector<regproc::StateId> term) {
  std::vector<bool> flags(n, false);
  for (auto s : term) flags[s] = true;
  return regproc::Automaton(n, 0, std::move(t), std::move(flags));
}

inline regproc::Transition tr(regproc::StateId from, const char* a, regproc::StateId to) {
  return {from, regproc::Action(a), to};
}

// fig2: p1 -a-> p2 -b-> p3, p3 -c-> p1, p3 -a-> p2, d-exits to 1.
inline regproc::Automaton fig2_hand() {
  return hand(4, {tr(0, "a", 1), tr(1, "b", 2), tr(2, "c", 0), tr(2, "a", 1), tr(0, "d", 3), tr(2, "d", 3)},
              {3});
}

// fig3 with the middle a-step going back to the start; the b-step leads to a
// deadlocked state.
inline regproc::Automaton fig3_hand() {
  return hand(4, {tr(0, "a", 1), tr(1, "b", 2), tr(1, "c", 3), tr(1, "a", 0), tr(0, "c", 3)}, {3});
}

}  // namespace fixtures
