#include "doctest.h"

#include "regproc/error.hpp"
#include "regproc/syntax.hpp"

using namespace regproc;

TEST_CASE("communication lookup is order-insensitive") {
  CommFn g;
  g.define(Action("c"), Action("b"), Action("e"));
  CHECK(g.lookup(Action("b"), Action("c")) == Action("e"));
  CHECK(g.lookup(Action("c"), Action("b")) == Action("e"));
  CHECK_FALSE(g.lookup(Action("b"), Action("b")));
  CHECK(g.size() == 1);
  g.define(Action("b"), Action("c"), Action("e"));  // same rule again
  CHECK(g.size() == 1);
  CHECK_THROWS_AS(g.define(Action("b"), Action("c"), Action("f")), InvalidArgument);
  CHECK(g.support() == ActionSet{Action("b"), Action("c"), Action("e")});
}

TEST_CASE("validation of the b/c handshake") {
  CommFn g;
  g.define(Action("b"), Action("c"), Action("e"));
  auto v = validate_comm_fn(g);
  CHECK(v.commutative);
  CHECK(v.associative);
  CHECK(v.handshaking);
  CHECK(v.violations.empty());
}

TEST_CASE("the empty function is valid") {
  auto v = validate_comm_fn(CommFn{});
  CHECK(v.associative);
  CHECK(v.handshaking);
}

TEST_CASE("a result used as an argument breaks handshaking") {
  CommFn g;
  g.define(Action("a"), Action("b"), Action("c"));
  g.define(Action("c"), Action("d"), Action("e"));
  auto v = validate_comm_fn(g);
  CHECK_FALSE(v.handshaking);
  bool found = false;
  for (const auto& x : v.violations)
    if (x.kind == CommViolation::Kind::NotHandshaking && x.actions.front() == Action("c")) found = true;
  CHECK(found);
}

TEST_CASE("non-associative tables are reported with a triple") {
  CommFn g;
  g.define(Action("a"), Action("b"), Action("c"));
  g.define(Action("c"), Action("d"), Action("e"));
  g.define(Action("b"), Action("d"), Action("a"));
  auto v = validate_comm_fn(g);
  CHECK_FALSE(v.associative);
  bool triple = false;
  for (const auto& x : v.violations)
    if (x.kind == CommViolation::Kind::NonAssociative) triple = x.actions.size() == 3;
  CHECK(triple);
}

TEST_CASE("associative with a non-trivial closure") {
  // gamma(a,a) = a: associative but not handshaking.
  CommFn g;
  g.define(Action("a"), Action("a"), Action("a"));
  auto v = validate_comm_fn(g);
  CHECK(v.associative);
  CHECK_FALSE(v.handshaking);
}

TEST_CASE("file format") {
  auto g = parse_comm_fn("# comment\n\nb c -> e   # trailing\n  x y -> z\n");
  CHECK(g.size() == 2);
  CHECK(g.lookup(Action("y"), Action("x")) == Action("z"));
  CHECK(render_comm_fn(g) == "b c -> e\nx y -> z\n");
  CHECK(parse_comm_fn(render_comm_fn(g)) == g);
  CHECK(parse_comm_fn("").empty());
  CHECK(parse_comm_fn("c b -> e\nb c -> e\n").size() == 1);
}

TEST_CASE("file format errors") {
  CHECK_THROWS_AS(parse_comm_fn("b c e\n"), FormatError);
  CHECK_THROWS_AS(parse_comm_fn("b c -> \n"), FormatError);
  CHECK_THROWS_AS(parse_comm_fn("b c => e\n"), FormatError);
  CHECK_THROWS_AS(parse_comm_fn("b 1 -> e\n"), FormatError);
  CHECK_THROWS_AS(parse_comm_fn("b c -> e\nc b -> f\n"), FormatError);
  try {
    parse_comm_fn("b c -> e\n\nb c d -> e\n");
    FAIL("expected an error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
