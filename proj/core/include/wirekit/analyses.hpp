#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "wirekit/circuit.hpp"
#include "wirekit/netlist.hpp"

namespace wirekit {

using GateCount = std::map<GateKind, std::size_t>;

// Atoms by kind; plugs are free and loops add nothing.
GateCount gate_count(const Circuit& c);
GateCount gate_count(const Netlist& nl);
std::size_t total_gates(const GateCount& count);
// "XOR:2 AND:2 OR:1"; order XOR AND OR NOT NOR MUX DFF, zero counts omitted.
std::string to_string(const GateCount& count);

// Delay contributed by each combinational gate kind; DFFs always cut paths.
struct DelayTable {
  std::array<std::size_t, 7> delay{1, 1, 1, 1, 1, 1, 0};
  std::size_t of(GateKind k) const { return delay[static_cast<std::size_t>(k)]; }
};

// Longest combinational path: from primary inputs or DFF outputs to primary
// outputs or DFF inputs. Throws CombinationalLoop on a DFF-free cycle.
std::size_t critical_path(const Netlist& nl, const DelayTable& delays = {});
std::size_t critical_path(const Circuit& c, const DelayTable& delays = {});

// Graphviz digraph: gates as boxes, primary inputs/outputs as labelled ports.
std::string to_dot(const Netlist& nl, std::string_view graph_name = "circuit");

// Text netlist format; see docs/netlist-format.md. from(to(nl)) == nl.
std::string to_netlist_file(const Netlist& nl);
// Throws ParseError carrying the offending line.
Netlist from_netlist_file(std::string_view text);

}  // namespace wirekit
