#include "regproc/encoding.hpp"

#include <algorithm>
#include <set>

#include "regproc/error.hpp"

namespace regproc {

namespace {

Action fresh(std::string name, const ActionSet& taken) {
  while (taken.count(Action(name))) name += '_';
  return Action(std::move(name));
}

// Left-associated sum; the empty sum is deadlock.
Expression sum(const std::vector<Expression>& terms) {
  if (terms.empty()) return Expression::deadlock();
  Expression e = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) e = Expression::alt(std::move(e), terms[i]);
  return e;
}

}  // namespace

EncodingResult encode_fa(const Automaton& f) {
  const std::size_t n = f.num_states();
  auto reach = f.reachable();
  for (StateId s = 0; s < n; ++s)
    if (!reach[s])
      throw InvalidAutomaton("state " + std::to_string(s) + " is unreachable from the initial state");

  EncodingResult r{Expression::deadlock(), {}, {}, Expression::deadlock(), {}, {}, {}};
  for (const auto& a : f.alphabet()) {
    r.action_index.emplace(a, r.actions.size());
    r.actions.push_back(a);
  }
  const std::size_t m = r.actions.size();

  ActionSet taken = f.alphabet();
  for (std::size_t i = 0; i < n; ++i) {
    Action a = fresh("enter_" + std::to_string(i), taken);
    taken.insert(a);
    r.control.enter.push_back(a);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Action a = fresh("leave_" + std::to_string(k) + "_" + std::to_string(j), taken);
      taken.insert(a);
      r.control.leave.emplace(std::pair{k, j}, a);
    }
  r.control.all.insert(r.control.enter.begin(), r.control.enter.end());
  for (const auto& [kj, a] : r.control.leave) {
    r.control.all.insert(a);
    r.gamma.define(r.control.enter[kj.second], a, r.actions[kj.first]);
  }

  // K[i] = {(k, j)} sorted, i.e. the labelled edges out of state i.
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> edges(n);
  for (const auto& t : f.transitions()) edges[t.from].emplace(r.action_index.at(t.action), t.to);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Expression> loops, leaves;
    for (auto [k, j] : edges[i]) {
      if (j == i)
        loops.push_back(Expression::act(r.actions[k]));
      else
        leaves.push_back(Expression::act(r.control.leave.at({k, j})));
    }
    Expression leave = sum(leaves);
    if (f.terminating(static_cast<StateId>(i))) leave = Expression::alt(std::move(leave), Expression::empty());
    Expression body = Expression::seq(
        Expression::seq(Expression::act(r.control.enter[i]), Expression::star(sum(loops))),
        std::move(leave));
    r.components.push_back(Expression::seq(Expression::empty(), Expression::star(std::move(body))));
  }

  auto succ = step(r.components[f.initial()], CommFn{});
  if (succ.size() != 1) throw InvalidArgument("component does not have a unique enter step");
  r.primed_initial = succ.front().target;

  Expression chain = f.initial() == 0 ? r.primed_initial : r.components[0];
  for (std::size_t i = 1; i < n; ++i)
    chain = Expression::par(std::move(chain), i == f.initial() ? r.primed_initial : r.components[i]);
  r.expression = Expression::encap(r.control.all, std::move(chain));
  return r;
}

IsoResult verify_encoding(const Automaton& f, std::size_t max_states) {
  auto enc = encode_fa(f);
  auto derived = derive_automaton(enc.expression, enc.gamma, max_states);
  return isomorphic(f, derived);
}

}  // namespace regproc
