#include "gen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gen {

using regproc::Action;
using regproc::Automaton;
using regproc::StateId;
using regproc::Transition;

namespace {

Action act(std::size_t k) { return Action("a" + std::to_string(k)); }

}  // namespace

Automaton random_automaton(Rng& rng, std::size_t max_states, std::size_t num_actions, double density) {
  const std::size_t n = 1 + below(rng, max_states);
  std::vector<Transition> trans;
  for (StateId s = 0; s < n; ++s)
    for (std::size_t k = 0; k < num_actions; ++k)
      for (StateId t = 0; t < n; ++t)
        if (coin(rng, density)) trans.push_back({s, act(k), t});
  std::vector<bool> term(n);
  for (std::size_t s = 0; s < n; ++s) term[s] = coin(rng, 0.3);
  return Automaton(n, static_cast<StateId>(below(rng, n)), std::move(trans), std::move(term));
}

Automaton random_connected_fa(Rng& rng, std::size_t max_states, std::size_t num_actions,
                              double extra_density) {
  const std::size_t n = 1 + below(rng, max_states);
  std::vector<Transition> trans;
  for (StateId s = 1; s < n; ++s)
    trans.push_back({static_cast<StateId>(below(rng, s)), act(below(rng, num_actions)), s});
  for (StateId s = 0; s < n; ++s)
    for (StateId t = 0; t < n; ++t)
      if (coin(rng, extra_density / static_cast<double>(n) * 2.0))
        trans.push_back({s, act(below(rng, num_actions)), t});
  std::vector<bool> term(n);
  for (std::size_t s = 0; s < n; ++s) term[s] = coin(rng, 0.4);
  return Automaton(n, 0, std::move(trans), std::move(term));
}

std::vector<StateId> random_permutation(Rng& rng, std::size_t n) {
  std::vector<StateId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Automaton permute(const Automaton& a, const std::vector<StateId>& perm) {
  const std::size_t n = a.num_states();
  std::vector<Transition> trans;
  for (const auto& t : a.transitions()) trans.push_back({perm[t.from], t.action, perm[t.to]});
  std::vector<bool> term(n);
  std::vector<std::optional<std::string>> labels(n);
  for (StateId s = 0; s < n; ++s) {
    term[perm[s]] = a.terminating(s);
    labels[perm[s]] = a.label(s);
  }
  return Automaton(n, perm[a.initial()], std::move(trans), std::move(term), std::move(labels));
}

Automaton unfold_copy(Rng& rng, const Automaton& a) {
  // Two copies; each edge randomly redirected to the twin of its target.
  const std::size_t n = a.num_states();
  std::vector<Transition> trans;
  for (const auto& t : a.transitions())
    for (StateId off : {StateId(0), static_cast<StateId>(n)}) {
      StateId to = t.to + (coin(rng) ? StateId(0) : static_cast<StateId>(n));
      trans.push_back({t.from + off, t.action, to});
    }
  std::vector<bool> term(2 * n);
  for (StateId s = 0; s < n; ++s) term[s] = term[s + n] = a.terminating(s);
  return Automaton(2 * n, a.initial(), std::move(trans), std::move(term));
}

}  // namespace gen
