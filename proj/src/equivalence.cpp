#include "regproc/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "regproc/error.hpp"

namespace regproc {

namespace {

// Adjacency over interned action ids, shared by the refinement routines.
struct Graph {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> succ;  // (action, to)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pred;  // (action, from)
  std::vector<bool> terminating;
};

void append(Graph& g, const Automaton& a, std::map<Action, std::size_t>& actions) {
  const std::size_t base = g.succ.size();
  g.succ.resize(base + a.num_states());
  g.pred.resize(base + a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s) g.terminating.push_back(a.terminating(s));
  for (const auto& t : a.transitions()) {
    auto id = actions.try_emplace(t.action, actions.size()).first->second;
    g.succ[base + t.from].emplace_back(id, base + t.to);
    g.pred[base + t.to].emplace_back(id, base + t.from);
  }
}

// Renumbers by first occurrence of each signature in state order and returns
// the number of blocks.
template <class Signature>
std::size_t renumber(const std::vector<Signature>& sigs, std::vector<std::size_t>& block) {
  std::map<Signature, std::size_t> ids;
  for (std::size_t s = 0; s < sigs.size(); ++s)
    block[s] = ids.try_emplace(sigs[s], ids.size()).first->second;
  return ids.size();
}

std::vector<std::size_t> coarsest_bisimulation(const Graph& g) {
  const std::size_t n = g.succ.size();
  std::vector<std::size_t> block(n);
  std::size_t count = renumber(g.terminating, block);

  using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
  std::vector<Signature> sigs(n);
  for (;;) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::pair<std::size_t, std::size_t>> moves;
      moves.reserve(g.succ[s].size());
      for (auto [act, to] : g.succ[s]) moves.emplace_back(act, block[to]);
      std::sort(moves.begin(), moves.end());
      moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
      sigs[s] = {block[s], std::move(moves)};
    }
    std::size_t next = renumber(sigs, block);
    if (next == count) return block;
    count = next;
  }
}

}  // namespace

std::vector<std::size_t> bisimulation_partition(const Automaton& a) {
  Graph g;
  std::map<Action, std::size_t> actions;
  append(g, a, actions);
  return coarsest_bisimulation(g);
}

BisimResult bisimilar(const Automaton& a, const Automaton& b) {
  Graph g;
  std::map<Action, std::size_t> actions;
  append(g, a, actions);
  append(g, b, actions);

  BisimResult r;
  r.partition = coarsest_bisimulation(g);
  const std::size_t off = a.num_states();
  r.bisimilar = r.partition[a.initial()] == r.partition[off + b.initial()];
  if (r.bisimilar)
    for (StateId s = 0; s < a.num_states(); ++s)
      for (StateId t = 0; t < b.num_states(); ++t)
        if (r.partition[s] == r.partition[off + t]) r.witness_relation.emplace_back(s, t);
  return r;
}

bool check_bisimulation(const Automaton& a, const Automaton& b,
                        const std::vector<StatePair>& relation) {
  std::set<StatePair> rel(relation.begin(), relation.end());
  for (auto [s, t] : rel)
    if (s >= a.num_states() || t >= b.num_states())
      throw InvalidArgument("relation references a state out of range");
  if (!rel.count({a.initial(), b.initial()})) return false;

  for (auto [s, t] : rel) {
    if (a.terminating(s) != b.terminating(t)) return false;
    for (const auto& x : a.out(s)) {
      bool matched = std::any_of(b.out(t).begin(), b.out(t).end(), [&](const Transition& y) {
        return y.action == x.action && rel.count({x.to, y.to});
      });
      if (!matched) return false;
    }
    for (const auto& y : b.out(t)) {
      bool matched = std::any_of(a.out(s).begin(), a.out(s).end(), [&](const Transition& x) {
        return x.action == y.action && rel.count({x.to, y.to});
      });
      if (!matched) return false;
    }
  }
  return true;
}

Automaton minimize(const Automaton& a) {
  auto block = bisimulation_partition(a);
  const std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;

  std::vector<StateId> rep(blocks, static_cast<StateId>(a.num_states()));
  for (StateId s = 0; s < a.num_states(); ++s) rep[block[s]] = std::min(rep[block[s]], s);

  constexpr auto kNone = static_cast<StateId>(-1);
  std::vector<StateId> new_id(blocks, kNone);
  std::vector<std::size_t> order;
  auto visit = [&](std::size_t b) {
    if (new_id[b] != kNone) return;
    new_id[b] = static_cast<StateId>(order.size());
    order.push_back(b);
  };
  visit(block[a.initial()]);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& t : a.out(rep[order[i]])) visit(block[t.to]);
  for (std::size_t b = 0; b < blocks; ++b) visit(b);

  std::vector<Transition> transitions;
  std::vector<bool> terminating(blocks);
  std::vector<std::optional<std::string>> labels(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    StateId r = rep[b];
    terminating[new_id[b]] = a.terminating(r);
    labels[new_id[b]] = a.label(r);
    for (const auto& t : a.out(r)) transitions.push_back({new_id[b], t.action, new_id[block[t.to]]});
  }
  return Automaton(blocks, 0, std::move(transitions), std::move(terminating), std::move(labels));
}

bool check_isomorphism(const Automaton& a, const Automaton& b, const std::vector<StateId>& mapping) {
  const std::size_t n = a.num_states();
  if (n != b.num_states() || mapping.size() != n) return false;
  if (a.transitions().size() != b.transitions().size()) return false;
  std::vector<bool> hit(n, false);
  for (StateId t : mapping) {
    if (t >= n || hit[t]) return false;
    hit[t] = true;
  }
  if (mapping[a.initial()] != b.initial()) return false;
  for (StateId s = 0; s < n; ++s)
    if (a.terminating(s) != b.terminating(mapping[s])) return false;
  // An injective image of equal size covers every transition of b.
  for (const auto& t : a.transitions())
    if (!b.has_transition(mapping[t.from], t.action, mapping[t.to])) return false;
  return true;
}

namespace {

// Stable colouring of the union graph by termination, initial-ness and the
// labelled colours of successors and predecessors.
std::vector<std::size_t> colour_refinement(const Graph& g, std::size_t init_a, std::size_t init_b) {
  const std::size_t n = g.succ.size();
  std::vector<std::size_t> colour(n);
  {
    std::vector<std::tuple<bool, bool, std::size_t, std::size_t>> seed(n);
    for (std::size_t s = 0; s < n; ++s)
      seed[s] = {g.terminating[s], s == init_a || s == init_b, g.succ[s].size(), g.pred[s].size()};
    renumber(seed, colour);
  }
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  using Signature = std::tuple<std::size_t, Edges, Edges>;
  std::size_t count = 0;
  std::vector<Signature> sigs(n);
  for (;;) {
    for (std::size_t s = 0; s < n; ++s) {
      Edges out, in;
      for (auto [act, to] : g.succ[s]) out.emplace_back(act, colour[to]);
      for (auto [act, from] : g.pred[s]) in.emplace_back(act, colour[from]);
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      sigs[s] = {colour[s], std::move(out), std::move(in)};
    }
    std::size_t next = renumber(sigs, colour);
    if (next == count) return colour;
    count = next;
  }
}

}  // namespace

IsoResult isomorphic(const Automaton& a, const Automaton& b) {
  IsoResult r;
  const std::size_t n = a.num_states();
  if (n != b.num_states() || a.transitions().size() != b.transitions().size() ||
      a.num_terminating() != b.num_terminating() || a.alphabet() != b.alphabet())
    return r;

  Graph g;
  std::map<Action, std::size_t> actions;
  append(g, a, actions);
  append(g, b, actions);
  auto colour = colour_refinement(g, a.initial(), n + b.initial());

  std::map<std::size_t, std::vector<StateId>> by_colour_b;
  std::map<std::size_t, std::size_t> count_a;
  for (StateId s = 0; s < n; ++s) {
    ++count_a[colour[s]];
    by_colour_b[colour[n + s]].push_back(s);
  }
  for (const auto& [c, k] : count_a)
    if (by_colour_b[c].size() != k) return r;

  // Assign a's states breadth-first from the initial state so that each new
  // state is constrained by an already mapped neighbour.
  std::vector<StateId> order;
  {
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue;
    for (StateId start : std::vector<StateId>{a.initial()}) {
      seen[start] = true;
      queue.push_back(start);
    }
    for (StateId s = 0;; ++s) {
      while (!queue.empty()) {
        StateId x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (auto [act, to] : g.succ[x])
          if (!seen[to]) {
            seen[to] = true;
            queue.push_back(static_cast<StateId>(to));
          }
        for (auto [act, from] : g.pred[x])
          if (!seen[from]) {
            seen[from] = true;
            queue.push_back(static_cast<StateId>(from));
          }
      }
      while (s < n && seen[s]) ++s;
      if (s >= n) break;
      seen[s] = true;
      queue.push_back(s);
    }
  }

  constexpr auto kNone = static_cast<StateId>(-1);
  std::vector<StateId> fwd(n, kNone), bwd(n, kNone);

  // Local consistency of u -> v against everything mapped so far, in both
  // directions and for both edge orientations.
  auto consistent = [&](StateId u, StateId v) {
    for (auto [act, to] : g.succ[u]) {
      StateId w = to == u ? v : fwd[to];
      if (w == kNone) continue;
      auto& s = g.succ[n + v];
      if (std::find(s.begin(), s.end(), std::pair<std::size_t, std::size_t>{act, n + w}) == s.end())
        return false;
    }
    for (auto [act, from] : g.pred[u]) {
      StateId w = fwd[from];
      if (w == kNone) continue;
      auto& p = g.pred[n + v];
      if (std::find(p.begin(), p.end(), std::pair<std::size_t, std::size_t>{act, n + w}) == p.end())
        return false;
    }
    for (auto [act, to] : g.succ[n + v]) {
      StateId w = to - n == v ? u : bwd[to - n];
      if (w == kNone) continue;
      auto& s = g.succ[u];
      if (std::find(s.begin(), s.end(), std::pair<std::size_t, std::size_t>{act, w}) == s.end())
        return false;
    }
    for (auto [act, from] : g.pred[n + v]) {
      StateId w = bwd[from - n];
      if (w == kNone) continue;
      auto& p = g.pred[u];
      if (std::find(p.begin(), p.end(), std::pair<std::size_t, std::size_t>{act, w}) == p.end())
        return false;
    }
    return true;
  };

  // cursor[d]: next candidate index to try for order[d].
  std::vector<std::size_t> cursor(n + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) break;
    StateId u = order[depth];
    const auto& cands = by_colour_b[colour[u]];
    bool placed = false;
    while (cursor[depth] < cands.size()) {
      StateId v = cands[cursor[depth]++];
      if (bwd[v] != kNone) continue;
      if (u == a.initial() && v != b.initial()) continue;
      if (!consistent(u, v)) continue;
      fwd[u] = v;
      bwd[v] = u;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return r;
    --depth;
    StateId prev = order[depth];
    bwd[fwd[prev]] = kNone;
    fwd[prev] = kNone;
  }

  if (!check_isomorphism(a, b, fwd)) return r;
  r.isomorphic = true;
  r.mapping = std::move(fwd);
  return r;
}

}  // namespace regproc
