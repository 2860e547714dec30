#include "wirekit/netlist.hpp"

#include <algorithm>

#include "wirekit/errors.hpp"

namespace wirekit {

std::string Driver::to_string() const {
  return (kind == Kind::kInput ? "in:" : "g:") + std::to_string(index);
}

std::string Sink::to_string() const {
  if (kind == Kind::kOutput) return "out:" + std::to_string(index);
  return "g:" + std::to_string(index) + "." + std::to_string(port);
}

std::map<Driver, std::vector<Sink>> Netlist::nets() const {
  std::map<Driver, std::vector<Sink>> out;
  for (const NetlistGate& g : gates) {
    for (std::size_t p = 0; p < g.inputs.size(); ++p) {
      out[g.inputs[p]].push_back(Sink{Sink::Kind::kGate, g.id, p});
    }
  }
  for (std::size_t o = 0; o < output_drivers.size(); ++o) {
    out[output_drivers[o]].push_back(Sink{Sink::Kind::kOutput, o, 0});
  }
  for (auto& [driver, sinks] : out) std::sort(sinks.begin(), sinks.end());
  return out;
}

std::size_t Netlist::dff_count() const {
  std::size_t n = 0;
  for (const NetlistGate& g : gates) n += is_sequential(g.kind) ? 1 : 0;
  return n;
}

void Netlist::validate() const {
  auto check = [&](const Driver& d, const std::string& where) {
    const std::size_t limit =
        d.kind == Driver::Kind::kInput ? inputs.size() : gates.size();
    if (d.index >= limit) {
      throw Error(where + " refers to missing driver " + d.to_string());
    }
  };
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].position != i) throw Error("input port positions are not 0..n-1");
  }
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (outputs[i].position != i) throw Error("output port positions are not 0..n-1");
  }
  if (output_drivers.size() != outputs.size()) {
    throw Error("every primary output needs exactly one driver");
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const NetlistGate& g = gates[i];
    if (g.id != i) throw Error("gate ids are not 0..n-1");
    if (g.inputs.size() != input_arity(g.kind)) {
      throw ArityMismatch("gate " + g.name + " has " + std::to_string(g.inputs.size()) +
                          " inputs");
    }
    for (const Driver& d : g.inputs) check(d, "gate " + g.name);
  }
  for (std::size_t o = 0; o < output_drivers.size(); ++o) {
    check(output_drivers[o], "output " + std::to_string(o));
  }
}

}  // namespace wirekit
