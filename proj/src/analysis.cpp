#include "regproc/analysis.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <utility>

#include "regproc/error.hpp"

namespace regproc {

SccDecomposition scc_decompose(const Automaton& a) {
  const std::size_t n = a.num_states();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

  SccDecomposition d;
  d.component_of.assign(n, kUnvisited);

  std::vector<std::size_t> number(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  // (state, index of next outgoing transition to visit)
  std::vector<std::pair<StateId, std::size_t>> call;
  std::size_t counter = 0;

  for (StateId root = 0; root < n; ++root) {
    if (number[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [v, next] = call.back();
      auto succ = a.out(v);
      if (next < succ.size()) {
        StateId w = succ[next++].to;
        if (number[w] == kUnvisited) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      StateId done = v;
      call.pop_back();
      if (!call.empty()) {
        StateId parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] != number[done]) continue;

      std::size_t id = d.members.size();
      std::vector<StateId> comp;
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        d.component_of[w] = id;
        comp.push_back(w);
      } while (w != done);
      std::sort(comp.begin(), comp.end());
      bool trivial = comp.size() == 1;
      if (trivial)
        for (const auto& t : a.out(comp[0]))
          if (t.to == comp[0]) trivial = false;
      d.members.push_back(std::move(comp));
      d.trivial.push_back(trivial);
    }
  }
  return d;
}

std::vector<bool> normed_states(const Automaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<StateId>> pred(n);
  for (const auto& t : a.transitions()) pred[t.to].push_back(t.from);
  std::vector<bool> normed(n, false);
  std::vector<StateId> work;
  for (StateId s = 0; s < n; ++s)
    if (a.terminating(s)) {
      normed[s] = true;
      work.push_back(s);
    }
  while (!work.empty()) {
    StateId s = work.back();
    work.pop_back();
    for (StateId p : pred[s])
      if (!normed[p]) {
        normed[p] = true;
        work.push_back(p);
      }
  }
  return normed;
}

std::vector<ExitTransition> exit_transitions(const Automaton& a, const SccDecomposition& d,
                                             StateId s) {
  std::vector<ExitTransition> out;
  for (const auto& t : a.out(s))
    if (!d.same_component(s, t.to)) out.push_back({t.action, t.to});
  return out;  // already sorted: transitions are ordered by (action, to)
}

std::vector<ExitTransition> normed_exit_transitions(const Automaton& a,
                                                    const SccDecomposition& d,
                                                    const std::vector<bool>& normed, StateId s) {
  std::vector<ExitTransition> out;
  for (const auto& t : a.out(s))
    if (!d.same_component(s, t.to) && normed.at(t.to)) out.push_back({t.action, t.to});
  return out;
}

std::vector<ExitTransition> normed_exit_transitions(const Automaton& a,
                                                    const SccDecomposition& d, StateId s) {
  return normed_exit_transitions(a, d, normed_states(a), s);
}

std::vector<StateId> alive_exit_states(const Automaton& a, const SccDecomposition& d,
                                       const std::vector<bool>& normed, std::size_t scc) {
  std::vector<StateId> alive;
  for (StateId s : d.members.at(scc))
    if (a.terminating(s) || !normed_exit_transitions(a, d, normed, s).empty())
      alive.push_back(s);
  return alive;
}

std::vector<StateId> alive_exit_states(const Automaton& a, const SccDecomposition& d,
                                       std::size_t scc) {
  return alive_exit_states(a, d, normed_states(a), scc);
}

std::size_t oc_measure(const Expression& e) {
  switch (e.kind()) {
    case Kind::Deadlock:
    case Kind::Empty:
      return 0;
    case Kind::Act:
    case Kind::Star:
      return 1;
    case Kind::Seq:
      return e.right().kind() == Kind::Star ? 0 : oc_measure(e.right()) + 1;
    case Kind::Alt:
      return std::max(oc_measure(e.left()), oc_measure(e.right())) + 1;
    case Kind::Par:
      return 0;
    case Kind::Encap:
      throw UnsupportedExpression("the OC measure is undefined on encapsulation");
  }
  return 0;
}

bool exit_equivalent(const ExitTransition& x, const ExitTransition& y, const SccDecomposition& d) {
  return x.action == y.action && d.same_component(x.target, y.target);
}

namespace {

std::vector<ExitSet> exit_sets_of(const Automaton& a, const SccDecomposition& d,
                                  const std::vector<bool>& normed,
                                  const std::vector<StateId>& states) {
  std::vector<ExitSet> sets;
  for (StateId s : states)
    sets.push_back({s, a.terminating(s), normed_exit_transitions(a, d, normed, s)});
  return sets;
}

// Witness for component `scc` under the BPA condition, if it fails there.
std::optional<Witness> bpa_violation(const Automaton& a, const SccDecomposition& d,
                                     const std::vector<bool>& normed, std::size_t scc) {
  if (d.trivial[scc]) return std::nullopt;
  auto alive = alive_exit_states(a, d, normed, scc);
  if (alive.size() < 2) return std::nullopt;
  auto sets = exit_sets_of(a, d, normed, alive);
  bool exits_agree = std::all_of(sets.begin(), sets.end(), [&](const ExitSet& e) {
    return e.normed_exits == sets.front().normed_exits;
  });
  bool term_agree = std::all_of(sets.begin(), sets.end(), [&](const ExitSet& e) {
    return e.terminating == sets.front().terminating;
  });
  if (exits_agree && term_agree) return std::nullopt;
  return Witness{scc,
                 exits_agree ? WitnessKind::TerminationDiffers : WitnessKind::NormedExitsDiffer,
                 std::move(alive), std::move(sets)};
}

using ExitClass = std::pair<Action, std::size_t>;

std::set<ExitClass> classes_of(const ExitSet& e, const SccDecomposition& d) {
  std::set<ExitClass> out;
  for (const auto& x : e.normed_exits) out.emplace(x.action, d.component_of[x.target]);
  return out;
}

std::optional<Witness> pa_violation(const Automaton& a, const SccDecomposition& d,
                                    const std::vector<bool>& normed, std::size_t scc) {
  auto alive = alive_exit_states(a, d, normed, scc);
  if (alive.empty()) return std::nullopt;
  auto sets = exit_sets_of(a, d, normed, alive);
  std::set<ExitClass> all;
  std::vector<std::set<ExitClass>> per_state;
  for (const auto& e : sets) {
    per_state.push_back(classes_of(e, d));
    all.insert(per_state.back().begin(), per_state.back().end());
  }
  for (const auto& c : per_state)
    if (c == all) return std::nullopt;
  return Witness{scc, WitnessKind::NoMaximalAliveExitState, std::move(alive), std::move(sets)};
}

}  // namespace

PropertyReport check_bpa_property(const Automaton& a) {
  PropertyReport r{Property::Bpa, true, {}};
  auto d = scc_decompose(a);
  auto normed = normed_states(a);
  for (std::size_t c = 0; c < d.size(); ++c)
    if (auto w = bpa_violation(a, d, normed, c)) r.witnesses.push_back(std::move(*w));
  r.holds = r.witnesses.empty();
  return r;
}

PropertyReport check_pa_property(const Automaton& a) {
  PropertyReport r{Property::Pa, true, {}};
  auto d = scc_decompose(a);
  auto normed = normed_states(a);
  for (std::size_t c = 0; c < d.size(); ++c)
    if (auto w = pa_violation(a, d, normed, c)) r.witnesses.push_back(std::move(*w));
  r.holds = r.witnesses.empty();
  return r;
}

PropertyReport check_property(const Automaton& a, Property p) {
  return p == Property::Bpa ? check_bpa_property(a) : check_pa_property(a);
}

bool confirm_witness(const Automaton& a, Property p, const Witness& w) {
  auto d = scc_decompose(a);
  if (w.scc >= d.size()) return false;
  for (StateId s : w.states)
    if (s >= a.num_states() || d.component_of[s] != w.scc) return false;
  auto normed = normed_states(a);
  auto fresh = p == Property::Bpa ? bpa_violation(a, d, normed, w.scc)
                                  : pa_violation(a, d, normed, w.scc);
  return fresh && fresh->kind == w.kind && fresh->states == w.states &&
         fresh->exit_sets == w.exit_sets;
}

Expression generate_random_expression(Theory theory, unsigned max_depth, std::uint64_t seed) {
  if (theory == Theory::ACP)
    throw InvalidArgument("random expressions are only generated for BPA and PA");
  static const char* const kActions[] = {"a", "b", "c", "d"};
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t n) { return rng() % n; };

  auto leaf = [&]() -> Expression {
    switch (pick(6)) {
      case 0: return Expression::deadlock();
      case 1: return Expression::empty();
      default: return Expression::act(kActions[pick(4)]);
    }
  };
  const std::uint64_t ops = theory == Theory::BPA ? 3 : 4;
  auto gen = [&](auto&& self, unsigned depth) -> Expression {
    if (depth == 0 || pick(2) == 0) return leaf();
    switch (pick(ops)) {
      case 0: {
        auto l = self(self, depth - 1);
        return Expression::seq(std::move(l), self(self, depth - 1));
      }
      case 1: {
        auto l = self(self, depth - 1);
        return Expression::alt(std::move(l), self(self, depth - 1));
      }
      case 2:
        return Expression::star(self(self, depth - 1));
      default: {
        auto l = self(self, depth - 1);
        return Expression::par(std::move(l), self(self, depth - 1));
      }
    }
  };
  return gen(gen, max_depth);
}

}  // namespace regproc
