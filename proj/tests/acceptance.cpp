#include <algorithm>
#include <cstdio>
#include <optional>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regproc/analysis.hpp"
#include "regproc/encoding.hpp"
#include "regproc/equivalence.hpp"
#include "regproc/error.hpp"
#include "regproc/io.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/lemmas.hpp"
#include "support/oracle.hpp"

using namespace regproc;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::optional<StateId> state_labelled(const Automaton& a, const std::string& label) {
  for (StateId s = 0; s < a.num_states(); ++s)
    if (a.display(s) == label) return s;
  return std::nullopt;
}

bool has_edge(const Automaton& a, StateId from, const char* act, StateId to) {
  return a.has_transition(from, Action(act), to);
}

std::size_t count_terminating(const Automaton& a) {
  std::size_t n = 0;
  for (StateId s = 0; s < a.num_states(); ++s) n += a.terminating(s);
  return n;
}

// 1. fig1
void criterion1(Check& c) {
  auto a = fixtures::derive(fixtures::kFig1);
  c.expect(a.num_states() == 3, "three states");
  c.expect(a.transitions().size() == 5, "five transitions");
  c.expect(count_terminating(a) == 1, "one terminating state");
  c.expect(isomorphic(a, fixtures::load("fig1.json")).isomorphic, "isomorphic to the hand-coded automaton");
  c.expect(a == oracle::derive(parse_expression(fixtures::kFig1), {}), "matches oracle");
}

// 2. fig2
void criterion2(Check& c) {
  auto a = fixtures::derive(fixtures::kFig2);
  auto d = scc_decompose(a);
  auto comp = d.component_of[a.initial()];
  c.expect(d.members[comp].size() == 3 && !d.trivial[comp], "non-trivial component of size 3");
  auto eps = state_labelled(a, "1");
  c.expect(eps && a.terminating(*eps), "terminated state");
  auto alive = alive_exit_states(a, d, comp);
  c.expect(alive.size() == 2, "two exit states");
  for (StateId s : alive)
    c.expect(eps && normed_exit_transitions(a, d, s) == std::vector<ExitTransition>{{Action("d"), *eps}},
             "normed exits are {(d, 1)}");
  c.expect(check_bpa_property(a).holds, "bpa check passes");
}

// 3. fig3
void criterion3(Check& c) {
  auto a = fixtures::derive(fixtures::kFig3);
  auto d = scc_decompose(a);
  auto normed = normed_states(a);
  auto q = state_labelled(a, "1.(b.0+1).(a.(b.0+1))*.c");
  auto dead = state_labelled(a, "1.0.(a.(b.0+1))*.c");
  auto eps = state_labelled(a, "1");
  c.expect(q && dead && eps, "states present");
  if (q && dead && eps) {
    c.expect(has_edge(a, *q, "b", *dead) && !d.same_component(*q, *dead), "b exit");
    c.expect(!normed[*dead], "b exit target is not normed");
    auto ex = exit_transitions(a, d, *q);
    c.expect(std::find(ex.begin(), ex.end(), ExitTransition{Action("b"), *dead}) != ex.end(),
             "b exit is an exit transition");
    c.expect(normed_exit_transitions(a, d, *q) == std::vector<ExitTransition>{{Action("c"), *eps}},
             "b exit excluded from normed exits");
  }
  c.expect(check_bpa_property(a).holds, "bpa check passes");
}

// 4. fig4
void criterion4(Check& c) {
  auto a = fixtures::derive(fixtures::kFig4);
  c.expect(a.num_states() == 4, "four states");
  c.expect(isomorphic(a, fixtures::load("fig4.json")).isomorphic, "isomorphic to the hand-coded automaton");
  auto r = check_bpa_property(a);
  c.expect(!r.holds && r.witnesses.size() == 1, "bpa check fails");
  if (!r.witnesses.empty()) {
    const auto& w = r.witnesses[0];
    auto d = scc_decompose(a);
    c.expect(d.members[w.scc].size() == 2, "witness component of size 2");
    c.expect(w.kind == WitnessKind::NormedExitsDiffer, "witness kind");
    c.expect(w.exit_sets.size() == 2 && w.exit_sets[0].normed_exits != w.exit_sets[1].normed_exits,
             "normed exits differ");
    c.expect(confirm_witness(a, Property::Bpa, w), "witness confirmed");
  }
  c.expect(check_pa_property(a).holds, "pa check passes");
  c.expect(!oracle::bpa_condition(a) && oracle::pa_condition(a), "oracle agrees");
}

// 5. fig6, with b and c communicating into e.
void criterion5(Check& c) {
  auto g = fixtures::gamma_bc_e();
  auto a = fixtures::derive(fixtures::kFig6, g);
  c.expect(a.num_states() == 6, "six states");
  c.expect(a.transitions().size() == 10, "ten transitions");
  auto p1 = state_labelled(a, "1.b.(a.b)*.d||c");
  auto p3 = state_labelled(a, "1.(a.b)*.d||1");
  c.expect(p1 && p3 && has_edge(a, *p1, "e", *p3), "e edge");
  c.expect(isomorphic(a, fixtures::load("fig6.json")).isomorphic, "isomorphic to the hand-coded automaton");
  c.expect(a == oracle::derive(parse_expression(fixtures::kFig6), g), "matches oracle");
  auto r = check_pa_property(a);
  c.expect(!r.holds, "pa check fails");
  c.expect(!r.witnesses.empty() && r.witnesses[0].kind == WitnessKind::NoMaximalAliveExitState,
           "no maximal alive exit state");
  for (const auto& w : r.witnesses) c.expect(confirm_witness(a, Property::Pa, w), "witness confirmed");
  c.expect(!oracle::pa_condition(a), "oracle agrees");
}

// 6. The two counterexamples about cycles and components.
void criterion6(Check& c) {
  {
    auto a = fixtures::derive(fixtures::kCycleCounter);
    auto r = state_labelled(a, "1.(a.(b+b.b))*.d");
    auto q = state_labelled(a, "1.(b+b.b).(a.(b+b.b))*.d");
    auto t = state_labelled(a, "1.b.(a.(b+b.b))*.d");
    auto eps = state_labelled(a, "1");
    c.expect(r && q && t && eps, "cycle states present");
    if (r && q && t && eps) {
      // C = {r, q} is a cycle, r terminates in one step, q leaves C by b.
      c.expect(has_edge(a, *r, "a", *q) && has_edge(a, *q, "b", *r), "cycle");
      c.expect(has_edge(a, *r, "d", *eps) && a.terminating(*eps), "d step to termination");
      c.expect(has_edge(a, *q, "b", *t) && *t != *r && *t != *q, "b step off the cycle");
    }
  }
  {
    auto a = fixtures::derive(fixtures::kExitCounter);
    auto d = scc_decompose(a);
    auto x = state_labelled(a, "1.(a.b)*||c");
    auto y = state_labelled(a, "1.b.(a.b)*||c");
    auto xt = state_labelled(a, "1.(a.b)*||1");
    auto yt = state_labelled(a, "1.b.(a.b)*||1");
    c.expect(x && y && xt && yt, "component states present");
    if (x && y && xt && yt) {
      c.expect(d.same_component(*x, *y) && d.members[d.component_of[*x]].size() == 2, "component {x, y}");
      c.expect(has_edge(a, *x, "c", *xt) && a.terminating(*xt), "x steps to a terminating state");
      c.expect(has_edge(a, *y, "c", *yt) && !d.same_component(*y, *yt), "y has an exit transition");
    }
  }
}

std::size_t g_want = 500;

// 7. Necessary conditions on generated BPA and PA expressions.
void criterion7(Check& c) {
  for (auto t : {lemmas::run_necessary_bpa(g_want, 71), lemmas::run_necessary_pa(g_want, 72)}) {
    std::cout << "  " << t.summary() << "\n";
    c.expect(t.ok(g_want), t.name);
  }
}

// 8. Structural statements.
void criterion8(Check& c) {
  std::vector<lemmas::Tally> all;
  all.push_back(lemmas::run_oc_monotonic(Theory::BPA, g_want, 81));
  all.push_back(lemmas::run_oc_monotonic(Theory::PA, g_want, 82));
  all.push_back(lemmas::run_scc_shape(Theory::BPA, g_want, 83));
  all.push_back(lemmas::run_scc_shape(Theory::PA, g_want, 84));
  lemmas::Tally peeling, basic;
  lemmas::run_peeling(g_want, 85, peeling, basic);
  all.push_back(peeling);
  all.push_back(basic);
  all.push_back(lemmas::run_parcsteps(g_want, 86));
  all.push_back(lemmas::run_starsteps(g_want, 87));
  lemmas::Tally s1, s2, p1, p2;
  lemmas::run_seq_exit_laws(g_want, 88, s1, s2);
  lemmas::run_par_exit_laws(g_want, 89, p1, p2);
  for (auto* t : {&s1, &s2, &p1, &p2}) all.push_back(*t);
  all.push_back(lemmas::run_exit_equivalence(g_want, 90));
  all.push_back(lemmas::run_etcompatibility(g_want, 91));
  for (const auto& t : all) {
    std::cout << "  " << t.summary() << "\n";
    c.expect(t.ok(g_want), t.name);
  }
}

// 9. Bisimulation against the naive fixpoint.
void criterion9(Check& c) {
  gen::Rng rng(9);
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    auto a = gen::random_automaton(rng, 12, 2, 0.1);
    auto b = i % 2 ? gen::unfold_copy(rng, a) : gen::random_automaton(rng, 12, 2, 0.1);
    if (b.num_states() > 12) b = gen::permute(a, gen::random_permutation(rng, a.num_states()));
    auto r = bisimilar(a, b);
    c.expect(r.bisimilar == oracle::naive_bisimilar(a, b), "agrees with oracle");
    if (r.bisimilar) {
      ++positives;
      c.expect(check_bisimulation(a, b, r.witness_relation), "witness relation");
    }
  }
  c.expect(positives >= 50, "enough bisimilar pairs");
  for (int i = 0; i < 100; ++i) {
    auto a = gen::random_automaton(rng, 8, 2, 0.15);
    auto b = gen::unfold_copy(rng, a);
    auto p = gen::permute(b, gen::random_permutation(rng, b.num_states()));
    c.expect(bisimilar(a, a).bisimilar, "reflexive");
    c.expect(bisimilar(a, b).bisimilar == bisimilar(b, a).bisimilar, "symmetric");
    c.expect(!(bisimilar(a, b).bisimilar && bisimilar(b, p).bisimilar) || bisimilar(a, p).bisimilar,
             "transitive");
  }
  for (int i = 0; i < 100; ++i) {
    auto a = gen::random_automaton(rng, 10, 2, 0.12);
    c.expect(lemmas::scc_lifting_holds(a, minimize(a)), "component lifting");
  }
}

// 10. Encoding of finite automata.
void criterion10(Check& c) {
  auto f5 = fixtures::load("fig5.json");
  c.expect(f5.num_states() == 4, "fig5 has four states");
  c.expect(verify_encoding(f5).isomorphic, "fig5");
  auto e5 = encode_fa(f5);
  c.expect(derive_automaton(e5.expression, e5.gamma).num_states() == 4, "fig5 state count");
  c.expect(validate_comm_fn(e5.gamma).handshaking, "fig5 handshaking");
  gen::Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    auto f = gen::random_connected_fa(rng, 8, 4);
    auto enc = encode_fa(f);
    c.expect(validate_comm_fn(enc.gamma).handshaking, "handshaking");
    auto d = derive_automaton(enc.expression, enc.gamma);
    c.expect(d.num_states() == f.num_states(), "state count");
    auto iso = isomorphic(f, d);
    c.expect(iso.isomorphic && check_isomorphism(f, d, iso.mapping), "isomorphic");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_want = std::stoul(argv[1]);
  const std::vector<std::function<void(Check&)>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i](c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool pass = c.failures.empty();
    failed += !pass;
    std::cout << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "  - " << c.failures[k] << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
