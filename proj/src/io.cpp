#include "regproc/io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"
#include "regproc/error.hpp"

namespace regproc {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::NormedExitsDiffer: return "normed-exits-differ";
    case WitnessKind::TerminationDiffers: return "termination-differs";
    case WitnessKind::NoMaximalAliveExitState: return "no-maximal-alive-exit-state";
  }
  return "?";
}

Json state_ref(const Automaton& a, StateId s) { return Json{{"id", s}, {"label", a.display(s)}}; }

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------
// Automata

std::string automaton_to_json(const Automaton& a) {
  Json states = Json::array();
  for (StateId s = 0; s < a.num_states(); ++s) {
    Json st;
    st["id"] = s;
    if (a.label(s)) st["label"] = *a.label(s);
    st["terminating"] = a.terminating(s);
    states.push_back(std::move(st));
  }
  Json transitions = Json::array();
  for (const auto& t : a.transitions())
    transitions.push_back({{"from", t.from}, {"action", t.action.name()}, {"to", t.to}});
  Json j;
  j["states"] = std::move(states);
  j["initial"] = a.initial();
  j["transitions"] = std::move(transitions);
  return dump(j);
}

Automaton automaton_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw FormatError("automaton must be a JSON object");
    if (!j.contains("states") || !j["states"].is_array())
      throw FormatError("missing 'states' array");
    const auto& states = j["states"];
    const std::size_t n = states.size();
    if (n == 0) throw FormatError("automaton has no states");

    std::vector<bool> terminating(n, false), seen(n, false);
    std::vector<std::optional<std::string>> labels(n);
    for (const auto& st : states) {
      auto id = st.at("id").get<std::size_t>();
      if (id >= n) throw FormatError("state id " + std::to_string(id) + " out of range");
      if (seen[id]) throw FormatError("duplicate state id " + std::to_string(id));
      seen[id] = true;
      if (st.contains("terminating")) terminating[id] = st["terminating"].get<bool>();
      if (st.contains("label")) labels[id] = st["label"].get<std::string>();
    }

    auto initial = j.at("initial").get<std::size_t>();
    if (initial >= n) throw FormatError("initial state out of range");

    std::vector<Transition> transitions;
    if (j.contains("transitions")) {
      for (const auto& t : j["transitions"]) {
        auto from = t.at("from").get<std::size_t>();
        auto to = t.at("to").get<std::size_t>();
        auto name = t.at("action").get<std::string>();
        if (from >= n || to >= n) throw FormatError("transition endpoint out of range");
        if (!Action::is_valid_name(name)) throw FormatError("invalid action name '" + name + "'");
        transitions.push_back({static_cast<StateId>(from), Action(name), static_cast<StateId>(to)});
      }
    }
    return Automaton(n, static_cast<StateId>(initial), std::move(transitions), std::move(terminating),
                     std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed automaton: ") + e.what());
  }
}

std::string automaton_to_dot(const Automaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  __init [shape=point];\n";
  for (StateId s = 0; s < a.num_states(); ++s)
    os << "  " << s << " [label=" << quote_dot(a.display(s))
       << ", shape=" << (a.terminating(s) ? "doublecircle" : "circle") << "];\n";
  os << "  __init -> " << a.initial() << ";\n";
  for (const auto& t : a.transitions())
    os << "  " << t.from << " -> " << t.to << " [label=" << quote_dot(t.action.name()) << "];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Property reports

std::string to_string(Property p) { return p == Property::Bpa ? "bpa" : "pa"; }

std::string report_to_json(const Automaton& a, const PropertyReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json states = Json::array();
    for (StateId s : w.states) states.push_back(state_ref(a, s));
    Json sets = Json::array();
    for (const auto& e : w.exit_sets) {
      Json exits = Json::array();
      for (const auto& x : e.normed_exits)
        exits.push_back({{"action", x.action.name()}, {"to", x.target}, {"label", a.display(x.target)}});
      sets.push_back({{"state", e.state}, {"terminating", e.terminating}, {"normed_exits", exits}});
    }
    witnesses.push_back({{"scc", w.scc},
                         {"states", states},
                         {"details", {{"kind", kind_name(w.kind)}, {"exit_sets", sets}}}});
  }
  Json j;
  j["property"] = to_string(r.property);
  j["verdict"] = r.holds ? "pass" : "fail";
  j["witnesses"] = std::move(witnesses);
  return dump(j);
}

std::string report_to_text(const Automaton& a, const PropertyReport& r) {
  std::ostringstream os;
  os << "property " << to_string(r.property) << ": " << (r.holds ? "pass" : "fail") << "\n";
  for (const auto& w : r.witnesses) {
    os << "  scc " << w.scc << " (" << kind_name(w.kind) << ")\n";
    for (const auto& e : w.exit_sets) {
      os << "    state " << e.state << " " << a.display(e.state)
         << (e.terminating ? " [terminating]" : "") << "\n";
      os << "      Extn = {";
      for (std::size_t i = 0; i < e.normed_exits.size(); ++i) {
        const auto& x = e.normed_exits[i];
        os << (i ? ", " : "") << "(" << x.action.name() << ", " << x.target << ")";
      }
      os << "}\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SCCs

std::string scc_to_json(const Automaton& a, const SccDecomposition& d) {
  Json comps = Json::array();
  for (std::size_t c = 0; c < d.size(); ++c) {
    Json states = Json::array();
    for (StateId s : d.members[c]) states.push_back(state_ref(a, s));
    comps.push_back({{"id", c}, {"trivial", static_cast<bool>(d.trivial[c])}, {"states", states}});
  }
  Json j;
  j["components"] = std::move(comps);
  j["component_of"] = d.component_of;
  return dump(j);
}

std::string scc_to_text(const Automaton& a, const SccDecomposition& d) {
  std::ostringstream os;
  os << d.size() << " strongly connected components\n";
  for (std::size_t c = 0; c < d.size(); ++c) {
    os << "scc " << c << (d.trivial[c] ? " (trivial)" : "") << ":";
    for (StateId s : d.members[c]) os << " " << s;
    os << "\n";
    for (StateId s : d.members[c]) os << "  " << s << " " << a.display(s) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Equivalences

std::string bisim_to_json(const BisimResult& r) {
  Json rel = Json::array();
  for (auto [s, t] : r.witness_relation) rel.push_back({s, t});
  Json j;
  j["bisimilar"] = r.bisimilar;
  j["partition"] = r.partition;
  j["relation"] = std::move(rel);
  return dump(j);
}

std::string bisim_to_text(const BisimResult& r) {
  std::ostringstream os;
  os << (r.bisimilar ? "bisimilar" : "not bisimilar") << "\n";
  if (r.bisimilar) {
    os << "relation:";
    for (auto [s, t] : r.witness_relation) os << " (" << s << "," << t << ")";
    os << "\n";
  }
  return os.str();
}

std::string iso_to_json(const IsoResult& r) {
  Json map = Json::array();
  for (StateId s = 0; s < r.mapping.size(); ++s) map.push_back({s, r.mapping[s]});
  Json j;
  j["isomorphic"] = r.isomorphic;
  j["mapping"] = std::move(map);
  return dump(j);
}

std::string iso_to_text(const IsoResult& r) {
  std::ostringstream os;
  os << (r.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
  for (StateId s = 0; s < r.mapping.size(); ++s) os << "  " << s << " -> " << r.mapping[s] << "\n";
  return os.str();
}

std::string comm_validation_to_json(const CommValidation& v) {
  Json viol = Json::array();
  for (const auto& x : v.violations) {
    Json acts = Json::array();
    for (const auto& a : x.actions) acts.push_back(a.name());
    viol.push_back({{"kind", x.kind == CommViolation::Kind::NonAssociative ? "non-associative"
                                                                         : "not-handshaking"},
                    {"actions", acts},
                    {"description", x.description}});
  }
  Json j;
  j["commutative"] = v.commutative;
  j["associative"] = v.associative;
  j["handshaking"] = v.handshaking;
  j["violations"] = std::move(viol);
  return dump(j);
}

std::string encoding_check_to_json(const IsoResult& r, std::size_t fa_states,
                                   std::size_t derived_states) {
  Json map = Json::array();
  for (StateId s = 0; s < r.mapping.size(); ++s) map.push_back({s, r.mapping[s]});
  Json j;
  j["isomorphic"] = r.isomorphic;
  j["states"] = fa_states;
  j["derived_states"] = derived_states;
  j["mapping"] = std::move(map);
  return dump(j);
}

std::string encoding_check_to_text(const IsoResult& r, std::size_t fa_states,
                                   std::size_t derived_states) {
  std::ostringstream os;
  os << (r.isomorphic ? "isomorphic" : "not isomorphic") << " (" << fa_states << " states, "
     << derived_states << " derived)\n";
  for (StateId s = 0; s < r.mapping.size(); ++s) os << "  " << s << " -> " << r.mapping[s] << "\n";
  return os.str();
}

std::string encoding_manifest_json(const EncodingResult& e) {
  Json states = Json::array();
  for (std::size_t i = 0; i < e.components.size(); ++i)
    states.push_back({{"index", i},
                      {"enter", e.control.enter[i].name()},
                      {"component", render_expression(e.components[i])}});
  Json actions = Json::array();
  for (std::size_t k = 0; k < e.actions.size(); ++k)
    actions.push_back({{"index", k}, {"action", e.actions[k].name()}});
  Json leave = Json::array();
  for (const auto& [kj, a] : e.control.leave)
    leave.push_back({{"action_index", kj.first}, {"target", kj.second}, {"name", a.name()}});
  Json j;
  j["states"] = std::move(states);
  j["actions"] = std::move(actions);
  j["leave"] = std::move(leave);
  j["primed_initial"] = render_expression(e.primed_initial);
  return dump(j);
}

}  // namespace regproc
