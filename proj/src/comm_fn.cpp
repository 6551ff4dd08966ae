#include <sstream>

#include "regproc/error.hpp"
#include "regproc/syntax.hpp"

namespace regproc {

namespace {

std::pair<Action, Action> key_of(const Action& a, const Action& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::string fmt_opt(const std::optional<Action>& a) { return a ? a->name() : "undefined"; }

}  // namespace

void CommFn::define(const Action& a, const Action& b, const Action& result) {
  auto [it, inserted] = table_.emplace(key_of(a, b), result);
  if (!inserted && it->second != result)
    throw InvalidArgument("conflicting communication rules for {" + a.name() + "," +
                          b.name() + "}: " + it->second.name() + " vs " + result.name());
}

std::optional<Action> CommFn::lookup(const Action& a, const Action& b) const {
  if (table_.empty()) return std::nullopt;
  auto it = table_.find(key_of(a, b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

ActionSet CommFn::support() const {
  ActionSet s;
  for (const auto& [k, r] : table_) {
    s.insert(k.first);
    s.insert(k.second);
    s.insert(r);
  }
  return s;
}

CommValidation validate_comm_fn(const CommFn& g) {
  CommValidation report;
  const ActionSet support = g.support();

  // Actions outside the support never communicate, so triples mentioning them
  // are undefined on both sides.
  for (const auto& a : support) {
    for (const auto& b : support) {
      auto ab = g.lookup(a, b);
      for (const auto& c : support) {
        auto bc = g.lookup(b, c);
        std::optional<Action> lhs = ab ? g.lookup(*ab, c) : std::nullopt;
        std::optional<Action> rhs = bc ? g.lookup(a, *bc) : std::nullopt;
        if (lhs != rhs) {
          report.associative = false;
          report.violations.push_back(
              {CommViolation::Kind::NonAssociative,
               {a, b, c},
               "gamma(gamma(" + a.name() + "," + b.name() + ")," + c.name() + ") = " +
                   fmt_opt(lhs) + " but gamma(" + a.name() + ",gamma(" + b.name() + "," +
                   c.name() + ")) = " + fmt_opt(rhs)});
        }
      }
    }
  }

  ActionSet arguments;
  for (const auto& [k, r] : g.table()) {
    arguments.insert(k.first);
    arguments.insert(k.second);
  }
  for (const auto& [k, r] : g.table()) {
    if (arguments.count(r)) {
      report.handshaking = false;
      report.violations.push_back(
          {CommViolation::Kind::NotHandshaking,
           {r, k.first, k.second},
           "result " + r.name() + " of {" + k.first.name() + "," + k.second.name() +
               "} is itself a communication argument"});
    }
  }
  return report;
}

CommFn parse_comm_fn(std::string_view text) {
  CommFn g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() != 4 || tok[2] != "->")
      throw FormatError(where + "expected 'a b -> c'");
    for (int i : {0, 1, 3})
      if (!Action::is_valid_name(tok[i]))
        throw FormatError(where + "invalid action name '" + tok[i] + "'");
    try {
      g.define(Action(tok[0]), Action(tok[1]), Action(tok[3]));
    } catch (const InvalidArgument& e) {
      throw FormatError(where + e.what());
    }
  }
  return g;
}

std::string render_comm_fn(const CommFn& g) {
  std::string out;
  for (const auto& [k, r] : g.table())
    out += k.first.name() + " " + k.second.name() + " -> " + r.name() + "\n";
  return out;
}

}  // namespace regproc
