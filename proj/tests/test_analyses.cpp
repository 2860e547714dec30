#include <doctest.h>

#include "support.hpp"
#include "wirekit/analyses.hpp"
#include "wirekit/generators.hpp"
#include "wirekit/semantics.hpp"

using namespace wirekit;
using wirekit::testing::Rng;

TEST_CASE("gate count display") {
  CHECK(to_string(gate_count(gen::fadd())) == "XOR:2 AND:2 OR:1");
  CHECK(to_string(GateCount{}).empty());
  CHECK(total_gates(gate_count(gen::ripple(3))) == 15);
}

TEST_CASE("gate count of circuit and netlist agree") {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = wirekit::testing::random_clocked(rng, 2);
    CHECK(gate_count(c) == gate_count(elaborate(c)));
  }
}

TEST_CASE("critical path") {
  CHECK(critical_path(gen::hadd()) == 1);
  CHECK(critical_path(gen::fadd()) == 3);
  CHECK(critical_path(identity(Shape::unit("x"))) == 0);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(critical_path(gen::ripple(n)) == 2 * n + 1);
  CHECK(critical_path(gen::dc(0)) == 2);
  CHECK(critical_path(gen::dc(1)) == 3);
  for (std::size_t k = 2; k <= 5; ++k) {
    CHECK(critical_path(gen::dc(k)) == critical_path(gen::dc(k - 1)) + 2);
  }
  // DFFs cut paths and count 0.
  CHECK(critical_path(gen::fifo("x", 3, 2)) == 0);
  CHECK(critical_path(gen::reg()) == 1);
  CHECK(critical_path(atom(not_gate("x", "y")) >> atom(dff_gate("y", "z")) >>
                      atom(not_gate("z", "w"))) == 1);

  DelayTable slow_xor;
  slow_xor.delay[static_cast<std::size_t>(GateKind::kXor)] = 3;
  CHECK(critical_path(gen::hadd(), slow_xor) == 3);
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(elaborate(gen::hadd()), "hadd");
  CHECK(dot.rfind("digraph \"hadd\" {", 0) == 0);
  CHECK(dot.find("XOR") != std::string::npos);
  CHECK(dot.find("in0 -> g0") != std::string::npos);
  CHECK(dot.back() == '\n');
  CHECK(to_dot(elaborate(gen::reg())).find("DFF") != std::string::npos);
}

TEST_CASE("netlist file round trip") {
  for (const auto& g : gen::registry()) {
    CAPTURE(g.name);
    const Netlist nl = elaborate(gen::build(g.name));
    CHECK(from_netlist_file(to_netlist_file(nl)) == nl);
  }
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Netlist nl = elaborate(wirekit::testing::random_clocked(rng, 2));
    CHECK(from_netlist_file(to_netlist_file(nl)) == nl);
  }
  // Awkward tags survive encoding.
  const Netlist odd = elaborate(atom(and_gate("a b", "100%", "\xc3\xa9\tz")));
  const std::string text = to_netlist_file(odd);
  CHECK(text.find("a%20b") != std::string::npos);
  CHECK(text.find("100%25") != std::string::npos);
  CHECK(from_netlist_file(text) == odd);
}

TEST_CASE("netlist parse errors carry the line") {
  const std::string good = to_netlist_file(elaborate(gen::hadd()));
  auto with = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    const auto at = t.find(from);
    REQUIRE(at != std::string::npos);
    return t.replace(at, from.size(), to);
  };
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      (void)from_netlist_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(with("wirekit-netlist 1", "wirekit-netlist 2")) == 1);
  CHECK(line_of(with("XOR", "XNOR")) > 0);
  CHECK(line_of(with("in:1 -> g:0.1", "in:1 -> g:0.0")) > 0);
  CHECK(line_of(with("end", "")) > 0);
  CHECK(line_of(good + "trailing\n") > 0);
  CHECK(line_of(with(" a\n", " a%2\n")) > 0);
  CHECK(line_of(with(" a\n", " a%61\n")) > 0);  // non-canonical escape
  CHECK(line_of(good) == 0);
}
