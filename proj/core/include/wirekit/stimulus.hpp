#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wirekit/netlist.hpp"

namespace wirekit {

// Ports sharing a tag, in order of first appearance. Positions are in
// canonical order, so the first one is the least significant bit.
struct PortGroup {
  std::string tag;
  std::vector<std::size_t> positions;
};

std::vector<PortGroup> group_ports(const std::vector<Port>& ports);

// Input assignment for a simulation run.
//
//   SPEC  := item ("," item)*
//   item  := tag "=" value
//   value := "0" | "1" | decimal word | "trace:" bits | "trace:" word ("/" word)*
//
// A decimal word fills a group of same-tagged inputs LSB first. `trace:101`
// gives a single-wire group one bit per tick; slash-separated words give one
// word per tick. Every input group needs exactly one item.
struct Stimulus {
  std::vector<BitTrace> traces;  // one per primary input
  std::size_t ticks = 1;
  bool has_traces = false;
};

// Constant values are held for every tick. Traces shorter than the run are
// padded with 0; longer ones are rejected. The run length is `ticks` if given,
// otherwise the longest trace, otherwise 1. Throws StimulusError.
Stimulus parse_stimulus(std::string_view spec, const std::vector<Port>& inputs,
                        std::optional<std::size_t> ticks = std::nullopt);

// "sum=2 cout=1": each output group as 0/1 or a decimal word.
std::string format_sample(const std::vector<Port>& outputs, const std::vector<bool>& bits);

// Input/output leaf counts and tag groups, e.g. "inputs 9: cin a[4] b[4]".
std::string interface_summary(const Netlist& nl);

}  // namespace wirekit
