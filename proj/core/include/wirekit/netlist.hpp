#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wirekit/gates.hpp"
#include "wirekit/shape.hpp"

namespace wirekit {

// Source of a net: a primary input leaf or the single output of a gate.
struct Driver {
  enum class Kind { kInput, kGate };
  Kind kind = Kind::kInput;
  std::size_t index = 0;

  static Driver input(std::size_t pos) { return {Kind::kInput, pos}; }
  static Driver gate(std::size_t id) { return {Kind::kGate, id}; }

  std::string to_string() const;  // "in:3", "g:7"

  friend bool operator==(const Driver&, const Driver&) = default;
  friend auto operator<=>(const Driver&, const Driver&) = default;
};

// Consumer of a net: input `port` of a gate, or a primary output leaf.
struct Sink {
  enum class Kind { kGate, kOutput };
  Kind kind = Kind::kGate;
  std::size_t index = 0;
  std::size_t port = 0;

  std::string to_string() const;  // "g:7.1", "out:2"

  friend bool operator==(const Sink&, const Sink&) = default;
  friend auto operator<=>(const Sink&, const Sink&) = default;
};

struct Port {
  std::size_t position = 0;
  Index path;
  std::string tag;

  friend bool operator==(const Port&, const Port&) = default;
};

struct NetlistGate {
  std::size_t id = 0;
  GateKind kind = GateKind::kNor;
  std::string name;  // instance-indexed: "<output tag>#<id>"
  std::vector<Driver> inputs;

  friend bool operator==(const NetlistGate&, const NetlistGate&) = default;
};

// Flat gate graph. Gate ids equal their position in `gates`; every gate input
// and every primary output has exactly one driver.
struct Netlist {
  std::vector<Port> inputs;
  std::vector<Port> outputs;
  std::vector<Driver> output_drivers;
  std::vector<NetlistGate> gates;

  // driver -> sinks, for every driver that has at least one sink.
  std::map<Driver, std::vector<Sink>> nets() const;

  std::size_t dff_count() const;

  // Throws Error if a driver refers to a missing input or gate, or if sizes
  // disagree.
  void validate() const;

  friend bool operator==(const Netlist&, const Netlist&) = default;
};

}  // namespace wirekit
