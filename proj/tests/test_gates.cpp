#include <doctest.h>

#include <array>

#include "wirekit/gates.hpp"

using namespace wirekit;

namespace {
bool eval2(GateKind k, bool a, bool b) {
  const std::array<bool, 2> in{a, b};
  return bool_sem(k, in);
}
}  // namespace

TEST_CASE("truth tables") {
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      CHECK(eval2(GateKind::kNor, a, b) == !(a || b));
      CHECK(eval2(GateKind::kAnd, a, b) == (a && b));
      CHECK(eval2(GateKind::kOr, a, b) == (a || b));
      CHECK(eval2(GateKind::kXor, a, b) == (a != b));
      for (bool s : {false, true}) {
        const std::array<bool, 3> in{s, a, b};
        CHECK(bool_sem(GateKind::kMux, in) == (s ? a : b));
      }
    }
    const std::array<bool, 1> in{a};
    CHECK(bool_sem(GateKind::kNot, in) == !a);
  }
}

TEST_CASE("arity and names") {
  CHECK(input_arity(GateKind::kNot) == 1);
  CHECK(input_arity(GateKind::kNor) == 2);
  CHECK(input_arity(GateKind::kMux) == 3);
  CHECK(input_arity(GateKind::kDff) == 1);
  for (GateKind k : kAllGateKinds) CHECK(parse_gate_kind(gate_name(k)) == k);
  CHECK_FALSE(parse_gate_kind("NAND").has_value());
  CHECK(is_sequential(GateKind::kDff));
  CHECK_FALSE(is_sequential(GateKind::kMux));

  const std::array<bool, 1> one{true};
  CHECK_THROWS_AS(bool_sem(GateKind::kAnd, one), ArityMismatch);
  CHECK_THROWS_AS(bool_sem(GateKind::kDff, one), SequentialGate);
  CHECK_THROWS_AS(GateInstance(GateKind::kAnd, {"a", "b"}), ArityMismatch);
}

TEST_CASE("gate instance shapes") {
  const GateInstance g = mux_gate("s", "x", "y", "o");
  CHECK(g.input_shape() ==
        Shape::sum(Shape::unit("s"), Shape::sum(Shape::unit("x"), Shape::unit("y"))));
  CHECK(g.output_shape() == Shape::unit("o"));
  CHECK(and_gate("a", "b", "c").input_shape() == Shape::sum(Shape::unit("a"), Shape::unit("b")));
  CHECK(not_gate("a", "c").input_shape() == Shape::unit("a"));
  CHECK(dff_gate("d", "q").output_tag() == "q");
}

TEST_CASE("dff step") {
  CHECK(kDffInitialState == false);
  const DffStep s = dff_step(false, true);
  CHECK(s.output == false);
  CHECK(s.next_state == true);
  CHECK(dff_step(true, false).output == true);
}
