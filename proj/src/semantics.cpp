#include "regproc/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "regproc/error.hpp"

namespace regproc {

// ---------------------------------------------------------------------------
// Automaton

Automaton::Automaton(std::size_t num_states, StateId initial,
                     std::vector<Transition> transitions, std::vector<bool> terminating,
                     std::vector<std::optional<std::string>> labels)
    : initial_(initial),
      transitions_(std::move(transitions)),
      terminating_(std::move(terminating)),
      labels_(std::move(labels)) {
  if (num_states == 0) throw InvalidAutomaton("automaton has no states");
  if (terminating_.size() != num_states)
    throw InvalidAutomaton("termination flags do not match the number of states");
  if (labels_.empty()) labels_.resize(num_states);
  if (labels_.size() != num_states)
    throw InvalidAutomaton("labels do not match the number of states");
  if (initial_ >= num_states) throw InvalidAutomaton("initial state out of range");
  for (const auto& t : transitions_)
    if (t.from >= num_states || t.to >= num_states)
      throw InvalidAutomaton("transition endpoint out of range");

  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  offsets_.assign(num_states + 1, 0);
  for (const auto& t : transitions_) ++offsets_[t.from + 1];
  for (std::size_t i = 0; i < num_states; ++i) offsets_[i + 1] += offsets_[i];
}

std::size_t Automaton::num_terminating() const noexcept {
  return static_cast<std::size_t>(std::count(terminating_.begin(), terminating_.end(), true));
}

std::string Automaton::display(StateId s) const {
  const auto& l = labels_.at(s);
  return l ? *l : "s" + std::to_string(s);
}

std::span<const Transition> Automaton::out(StateId s) const {
  if (s >= num_states()) throw InvalidArgument("state out of range");
  return std::span<const Transition>(transitions_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
}

bool Automaton::has_transition(StateId from, const Action& a, StateId to) const {
  auto succ = out(from);
  return std::binary_search(succ.begin(), succ.end(), Transition{from, a, to});
}

ActionSet Automaton::alphabet() const {
  ActionSet s;
  for (const auto& t : transitions_) s.insert(t.action);
  return s;
}

std::vector<bool> Automaton::reachable() const {
  std::vector<bool> seen(num_states(), false);
  std::vector<StateId> stack{initial_};
  seen[initial_] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const auto& t : out(s))
      if (!seen[t.to]) {
        seen[t.to] = true;
        stack.push_back(t.to);
      }
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Operational rules

bool terminates(const Expression& e) { return e.terminates(); }

namespace {

void push_unique(std::vector<Step>& out, Step s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

void collect(const Expression& e, const CommFn& g, std::vector<Step>& out) {
  switch (e.kind()) {
    case Kind::Deadlock:
    case Kind::Empty:
      return;
    case Kind::Act:
      push_unique(out, {e.action(), Expression::empty()});
      return;
    case Kind::Alt:
      collect(e.left(), g, out);
      collect(e.right(), g, out);
      return;
    case Kind::Seq: {
      std::vector<Step> left;
      collect(e.left(), g, left);
      for (auto& s : left) push_unique(out, {std::move(s.action), Expression::seq(s.target, e.right())});
      if (e.left().terminates()) collect(e.right(), g, out);
      return;
    }
    case Kind::Star: {
      std::vector<Step> inner;
      collect(e.body(), g, inner);
      for (auto& s : inner) push_unique(out, {std::move(s.action), Expression::seq(s.target, e)});
      return;
    }
    case Kind::Par: {
      std::vector<Step> left, right;
      collect(e.left(), g, left);
      collect(e.right(), g, right);
      for (const auto& s : left) push_unique(out, {s.action, Expression::par(s.target, e.right())});
      for (const auto& s : right) push_unique(out, {s.action, Expression::par(e.left(), s.target)});
      if (!g.empty())
        for (const auto& l : left)
          for (const auto& r : right)
            if (auto c = g.lookup(l.action, r.action))
              push_unique(out, {*c, Expression::par(l.target, r.target)});
      return;
    }
    case Kind::Encap: {
      std::vector<Step> inner;
      collect(e.body(), g, inner);
      for (auto& s : inner)
        if (!e.blocked().count(s.action))
          push_unique(out, {std::move(s.action), Expression::encap(e.blocked(), s.target)});
      return;
    }
  }
}

}  // namespace

std::vector<Step> step(const Expression& e, const CommFn& g) {
  std::vector<Step> out;
  collect(e, g, out);
  return out;
}

// ---------------------------------------------------------------------------
// Derivation

StateSpace explore(const Expression& e, const CommFn& g, std::size_t max_states) {
  if (max_states == 0) throw InvalidArgument("max_states must be positive");

  std::unordered_map<Expression, StateId, ExpressionHash> index;
  std::vector<Expression> terms;
  std::vector<std::optional<std::string>> labels;
  std::vector<bool> terminating;
  std::vector<Transition> transitions;
  // Rendered successors that are not (yet) states.
  std::unordered_map<Expression, std::string, ExpressionHash> rendered;

  auto add_state = [&](const Expression& x, std::string label) {
    if (terms.size() >= max_states) throw StateLimitExceeded(max_states);
    auto id = static_cast<StateId>(terms.size());
    index.emplace(x, id);
    terms.push_back(x);
    labels.emplace_back(std::move(label));
    terminating.push_back(x.terminates());
    return id;
  };
  auto label_of = [&](const Expression& x) -> const std::string& {
    if (auto it = index.find(x); it != index.end()) return *labels[it->second];
    auto it = rendered.find(x);
    if (it == rendered.end()) it = rendered.emplace(x, render_expression(x)).first;
    return it->second;
  };

  add_state(e, render_expression(e));
  for (std::size_t cur = 0; cur < terms.size(); ++cur) {
    auto succ = step(terms[cur], g);
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(succ.size());
    for (std::size_t i = 0; i < succ.size(); ++i) order.emplace_back(label_of(succ[i].target), i);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
      const auto& sa = succ[a.second].action;
      const auto& sb = succ[b.second].action;
      if (sa != sb) return sa < sb;
      return a.first < b.first;
    });
    for (auto& [label, i] : order) {
      const auto& s = succ[i];
      StateId to;
      if (auto it = index.find(s.target); it != index.end()) {
        to = it->second;
      } else {
        rendered.erase(s.target);
        to = add_state(s.target, std::move(label));
      }
      transitions.push_back({static_cast<StateId>(cur), s.action, to});
    }
  }

  Automaton a(terms.size(), 0, std::move(transitions), std::move(terminating), std::move(labels));
  return {std::move(a), std::move(terms)};
}

Automaton derive_automaton(const Expression& e, const CommFn& g, std::size_t max_states) {
  return explore(e, g, max_states).automaton;
}

}  // namespace regproc
