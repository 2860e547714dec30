#include <doctest.h>

#include "wirekit/generators.hpp"
#include "wirekit/semantics.hpp"
#include "wirekit/stimulus.hpp"

using namespace wirekit;

TEST_CASE("port groups") {
  const Netlist nl = elaborate(gen::ripple(3));
  const auto g = group_ports(nl.inputs);
  REQUIRE(g.size() == 3);
  CHECK(g[0].tag == "cin");
  CHECK(g[1].positions == std::vector<std::size_t>{1, 2, 3});
  CHECK(interface_summary(nl) == "inputs 7: cin a[3] b[3]\noutputs 4: sum[3] cout\ngates 15 (dff 0)\n");
}

TEST_CASE("constant inputs") {
  const Netlist nl = elaborate(gen::ripple(4));
  const Stimulus s = parse_stimulus("cin=0, a=9,b=9", nl.inputs);
  CHECK(s.ticks == 1);
  CHECK_FALSE(s.has_traces);
  std::vector<bool> bits;
  for (const auto& t : s.traces) bits.push_back(t[0]);
  CHECK(bits == std::vector<bool>{false, true, false, false, true, true, false, false, true});
  CHECK(format_sample(nl.outputs, Simulator(nl).eval(bits)) == "sum=2 cout=1");
}

TEST_CASE("trace inputs") {
  const Netlist nl = elaborate(gen::fifo("x", 2, 1));
  const Stimulus s = parse_stimulus("x=trace:101", nl.inputs, 5);
  CHECK(s.ticks == 5);
  CHECK(s.traces[0] == BitTrace{true, false, true, false, false});
  CHECK(parse_stimulus("x=trace:101", nl.inputs).ticks == 3);
  CHECK(parse_stimulus("x=1", nl.inputs, 3).traces[0] == BitTrace{true, true, true});

  const Netlist wide = elaborate(gen::fifo("x", 1, 3));
  const Stimulus w = parse_stimulus("x=trace:5/2", wide.inputs);
  CHECK(w.traces[0] == BitTrace{true, false});
  CHECK(w.traces[1] == BitTrace{false, true});
  CHECK(w.traces[2] == BitTrace{true, false});
}

TEST_CASE("malformed specs") {
  const Netlist nl = elaborate(gen::ripple(2));
  CHECK_THROWS_AS(parse_stimulus("cin=0,a=1", nl.inputs), StimulusError);       // b missing
  CHECK_THROWS_AS(parse_stimulus("cin=0,a=4,b=0", nl.inputs), StimulusError);   // too wide
  CHECK_THROWS_AS(parse_stimulus("cin=2,a=1,b=0", nl.inputs), StimulusError);
  CHECK_THROWS_AS(parse_stimulus("cin=0,a=1,b=0,z=1", nl.inputs), StimulusError);
  CHECK_THROWS_AS(parse_stimulus("cin=0,a=1,a=1,b=0", nl.inputs), StimulusError);
  CHECK_THROWS_AS(parse_stimulus("cin0,a=1,b=0", nl.inputs), StimulusError);
  CHECK_THROWS_AS(parse_stimulus("cin=x,a=1,b=0", nl.inputs), StimulusError);
  CHECK_THROWS_AS(parse_stimulus("cin=trace:12,a=1,b=0", nl.inputs), StimulusError);
  CHECK_THROWS_AS(parse_stimulus("cin=trace:1111,a=1,b=0", nl.inputs, 2), StimulusError);
}
