#include "doctest.h"

#include "regproc/equivalence.hpp"
#include "regproc/error.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/lemmas.hpp"
#include "support/oracle.hpp"

using namespace regproc;

namespace {

bool bisim(const char* x, const char* y) {
  return bisimilar(fixtures::derive(x), fixtures::derive(y)).bisimilar;
}

}  // namespace

TEST_CASE("bisimilarity of small terms") {
  CHECK(bisim("a+a", "a"));
  CHECK_FALSE(bisim("a.(b+c)", "a.b+a.c"));
  CHECK(bisim("1.a", "a"));
  CHECK(bisim("a*.a*", "a*"));
  CHECK_FALSE(bisim("a*", "a.a*"));
  CHECK_FALSE(bisim("0", "1"));
  CHECK(bisim("a||b", "a.b+b.a"));
  auto r = bisimilar(fixtures::derive(fixtures::kFig1), fixtures::load("fig1.json"));
  CHECK(r.bisimilar);
  CHECK(check_bisimulation(fixtures::derive(fixtures::kFig1), fixtures::load("fig1.json"), r.witness_relation));
}

TEST_CASE("partition covers the disjoint union") {
  auto a = fixtures::derive("a+a");
  auto b = fixtures::derive("a");
  auto r = bisimilar(a, b);
  REQUIRE(r.partition.size() == a.num_states() + b.num_states());
  CHECK(r.partition[a.initial()] == r.partition[a.num_states() + b.initial()]);
  auto n = bisimilar(fixtures::derive("a"), fixtures::derive("b"));
  CHECK_FALSE(n.bisimilar);
  CHECK(n.witness_relation.empty());
}

TEST_CASE("checking a claimed bisimulation") {
  auto a = fixtures::derive(fixtures::kFig4);
  std::vector<StatePair> id;
  for (StateId s = 0; s < a.num_states(); ++s) id.emplace_back(s, s);
  CHECK(check_bisimulation(a, a, id));
  CHECK_FALSE(check_bisimulation(a, a, {}));
  auto partial = id;
  partial.pop_back();
  CHECK_FALSE(check_bisimulation(a, a, partial));
  CHECK_FALSE(check_bisimulation(a, a, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
  CHECK_THROWS_AS(check_bisimulation(a, a, {{0, 9}}), InvalidArgument);
}

TEST_CASE("minimisation") {
  auto aa = fixtures::derive("a+a");
  CHECK(minimize(aa).num_states() == 2);
  auto f1 = fixtures::derive(fixtures::kFig1);
  auto m = minimize(f1);
  CHECK(m.num_states() == 2);
  CHECK(m.initial() == 0);
  CHECK(m.display(0) == f1.display(0));
  CHECK(bisimilar(f1, m).bisimilar);
  CHECK(isomorphic(minimize(m), m).isomorphic);
}

TEST_CASE("isomorphism") {
  auto f6 = fixtures::derive(fixtures::kFig6, fixtures::gamma_bc_e());
  gen::Rng rng(1);
  auto perm = gen::random_permutation(rng, f6.num_states());
  auto p = gen::permute(f6, perm);
  auto r = isomorphic(f6, p);
  REQUIRE(r.isomorphic);
  CHECK(r.mapping == perm);
  CHECK(check_isomorphism(f6, p, r.mapping));
  CHECK_FALSE(isomorphic(fixtures::derive(fixtures::kFig1), fixtures::derive(fixtures::kFig4)).isomorphic);
  CHECK_FALSE(isomorphic(fixtures::derive(fixtures::kFig4), fixtures::load("fig6.json")).isomorphic);
  // Same counts, different wiring.
  Automaton x(2, 0, {{0, Action("a"), 1}, {1, Action("a"), 1}}, {false, false});
  Automaton y(2, 0, {{0, Action("a"), 0}, {0, Action("a"), 1}}, {false, false});
  CHECK_FALSE(isomorphic(x, y).isomorphic);
  CHECK_FALSE(check_isomorphism(x, y, {0, 1}));
  CHECK_FALSE(check_isomorphism(x, y, {0, 0}));
}

TEST_CASE("partition refinement agrees with the greatest fixpoint") {
  gen::Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    auto a = gen::random_automaton(rng, 10, 2, 0.1);
    auto b = i % 2 ? gen::unfold_copy(rng, a) : gen::random_automaton(rng, 10, 2, 0.1);
    auto r = bisimilar(a, b);
    CHECK(r.bisimilar == oracle::naive_bisimilar(a, b));
    if (r.bisimilar) CHECK(check_bisimulation(a, b, r.witness_relation));
    if (i % 2) CHECK(r.bisimilar);
  }
}

TEST_CASE("bisimilarity is an equivalence") {
  gen::Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    auto a = gen::random_automaton(rng, 7, 2, 0.15);
    auto b = gen::unfold_copy(rng, a);
    auto c = gen::permute(b, gen::random_permutation(rng, b.num_states()));
    CHECK(bisimilar(a, a).bisimilar);
    CHECK(bisimilar(a, b).bisimilar == bisimilar(b, a).bisimilar);
    if (bisimilar(a, b).bisimilar && bisimilar(b, c).bisimilar) CHECK(bisimilar(a, c).bisimilar);
  }
}

TEST_CASE("isomorphism search agrees with brute force") {
  gen::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::random_automaton(rng, 6, 2, 0.15);
    Automaton b = i % 2 ? gen::permute(a, gen::random_permutation(rng, a.num_states()))
                        : gen::random_automaton(rng, 6, 2, 0.15);
    auto r = isomorphic(a, b);
    CHECK(r.isomorphic == oracle::brute_force_isomorphic(a, b));
    if (r.isomorphic) {
      CHECK(check_isomorphism(a, b, r.mapping));
      CHECK(bisimilar(a, b).bisimilar);
    }
  }
}

TEST_CASE("minimised automata are bisimilar and have distinct states") {
  gen::Rng rng(24);
  for (int i = 0; i < 80; ++i) {
    auto a = gen::random_automaton(rng, 10, 2, 0.1);
    auto m = minimize(a);
    CHECK(bisimilar(a, m).bisimilar);
    auto part = bisimulation_partition(m);
    std::set<std::size_t> blocks(part.begin(), part.end());
    CHECK(blocks.size() == m.num_states());
    CHECK(isomorphic(minimize(m), m).isomorphic);
    CHECK(lemmas::scc_lifting_holds(a, m));
  }
}
