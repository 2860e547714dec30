#include <doctest.h>

#include "wirekit/circuit.hpp"
#include "wirekit/generators.hpp"

using namespace wirekit;

namespace {
Shape u(const char* t) { return Shape::unit(t); }
}  // namespace

TEST_CASE("constructors record shapes") {
  const Circuit x = atom(xor_gate("a", "b", "s"));
  CHECK(x.kind() == Circuit::Kind::kAtom);
  CHECK(x.input_shape() == Shape::sum(u("a"), u("b")));
  CHECK(x.output_shape() == u("s"));

  const Circuit p = x & atom(not_gate("c", "d"));
  CHECK(p.kind() == Circuit::Kind::kPar);
  CHECK(p.input_shape() == Shape::sum(Shape::sum(u("a"), u("b")), u("c")));

  const Circuit s = fork2(Shape::sum(u("a"), u("b"))) >> (x & atom(and_gate("a", "b", "c")));
  CHECK(s.kind() == Circuit::Kind::kSer);
  CHECK(s.output_shape() == Shape::sum(u("s"), u("c")));
  CHECK(atom_count(s) == 2);
  CHECK_FALSE(contains_dff(s));
  CHECK_FALSE(contains_loop(s));
  CHECK(contains_dff(gen::reg()));
  CHECK(contains_loop(gen::reg()));
  CHECK(gen::reg().feedback() == u("out"));
  CHECK_THROWS_AS(x.map(), Error);
}

TEST_CASE("canonical plugs") {
  const Shape a = u("a"), b = u("b"), c = u("c");
  CHECK(swap_map(a, b).sources() == std::vector<std::size_t>{1, 0});
  CHECK(fork2_map(Shape::sum(a, b)).sources() == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK(forget_left_map(a, b).sources() == std::vector<std::size_t>{1});
  CHECK(forget_right_map(a, b).sources() == std::vector<std::size_t>{0});
  CHECK(assoc_left(a, b, c).output_shape() == Shape::sum(Shape::sum(a, b), c));
  CHECK(assoc_right(a, b, c).output_shape() == Shape::sum(a, Shape::sum(b, c)));
  CHECK(identity_map(Shape::sumn(a, 3)).sources() == std::vector<std::size_t>{0, 1, 2});

  const Circuit r = rewire(Shape::sum(a, b), Shape::sum(b, a),
                           {{Index::parse("L"), Index::parse("R")},
                            {Index::parse("R"), Index::parse("L")}});
  CHECK(r.map() == swap_map(a, b));
  CHECK_THROWS_AS(rewire(a, Shape::sum(a, a), std::vector<std::size_t>{0}), InvalidMap);
  CHECK_THROWS_AS(reshape(a, Shape::sum(a, a)), ShapeMismatch);
  CHECK(reshape(Shape::sumn(a, 2), Shape::sum(a, a)).map().sources() ==
        std::vector<std::size_t>{0, 1});
}

// The five ill-shaped compositions documented in the README.
TEST_CASE("ill-shaped compositions are rejected at construction") {
  SUBCASE("serial arity clash") {
    CHECK_THROWS_AS(atom(xor_gate("a", "b", "s")) >> atom(and_gate("s", "t", "u")), ShapeMismatch);
  }
  SUBCASE("serial tag mismatch") {
    CHECK_THROWS_AS(atom(not_gate("a", "x")) >> atom(not_gate("y", "z")), ShapeMismatch);
  }
  SUBCASE("loop feedback mismatch") {
    CHECK_THROWS_AS(loop(atom(and_gate("a", "f", "g")) >> fork2(u("g"))), ShapeMismatch);
  }
  SUBCASE("loop body not sum-shaped") {
    CHECK_THROWS_AS(loop(atom(not_gate("a", "b"))), ShapeMismatch);
  }
  SUBCASE("plug map over different shapes") {
    const PlugMap m = swap_map(u("a"), u("b"));
    CHECK_THROWS_AS(plug(Shape::sum(u("a"), u("c")), Shape::sum(u("b"), u("a")), m), ShapeMismatch);
  }
  SUBCASE("composen of a non-square cell") {
    CHECK_THROWS_AS(gen::composen(gen::hadd(), 2), ShapeMismatch);
  }
}

TEST_CASE("ShapeMismatch reports where shapes differ") {
  try {
    (void)(atom(not_gate("a", "x")) >> atom(and_gate("x", "y", "z")));
    FAIL("expected ShapeMismatch");
  } catch (const ShapeMismatch& e) {
    CHECK(e.expected() == u("x"));
    CHECK(e.where().to_string() == "~");
  }
}
