#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wirekit/circuit.hpp"
#include "wirekit/netlist.hpp"
#include "wirekit/shape.hpp"

namespace wirekit {

// Flattens a circuit: plugs become connectivity, loops close their feedback
// nets. Throws CombinationalLoop if a feedback wire is read but is only
// driven by itself through plugs.
Netlist elaborate(const Circuit& c);

// Combinational gates in dependency order, DFF outputs treated as sources.
// Throws CombinationalLoop if a DFF-free cycle exists.
std::vector<std::size_t> combinational_order(const Netlist& nl);

// Netlist evaluator with a precomputed topological order over the
// combinational gates (DFF outputs act as sources). Construction throws
// CombinationalLoop if a DFF-free cycle exists.
class Simulator {
 public:
  explicit Simulator(Netlist netlist);

  const Netlist& netlist() const { return netlist_; }
  bool has_delay() const { return !dffs_.empty(); }
  std::size_t input_count() const { return netlist_.inputs.size(); }
  std::size_t output_count() const { return netlist_.outputs.size(); }

  // One combinational evaluation. Throws HasDelay if the netlist has a DFF.
  std::vector<bool> eval(const std::vector<bool>& inputs) const;

  // Clocked run from the all-false DFF state. inputs[i] is the trace of
  // primary input i; every trace must have length `ticks`.
  std::vector<BitTrace> run(const std::vector<BitTrace>& inputs, std::size_t ticks) const;

 private:
  struct Ref {
    bool from_input;
    std::size_t index;
  };
  bool read(const Ref& r, const std::vector<bool>& in, const std::vector<bool>& val) const {
    return r.from_input ? in[r.index] : val[r.index];
  }
  void settle(const std::vector<bool>& in, std::vector<bool>& val) const;

  Netlist netlist_;
  std::vector<std::vector<Ref>> gate_inputs_;
  std::vector<Ref> output_refs_;
  std::vector<std::size_t> order_;  // combinational gates, topologically sorted
  std::vector<std::size_t> dffs_;
};

// Combinational meaning: the unique output bundle for `ins`. Throws HasDelay
// if `c` contains a DFF and CombinationalLoop on a DFF-free cycle.
BoolBundle eval_combinational(const Circuit& c, const BoolBundle& ins);

// Synchronous simulation over finite traces. Every cycle must pass through a
// DFF. `ticks` is required only when the circuit has no input leaves.
TraceBundle sim_clocked(const Circuit& c, const TraceBundle& ins,
                        std::optional<std::size_t> ticks = std::nullopt);

// Reference evaluators that walk the AST and apply the composition rules
// directly (serial: an intermediate bundle; parallel: left/right halves; plug:
// precomposition). A boolean Loop is solved by enumerating every feedback
// assignment and requiring a unique output; a stream Loop is solved by
// fixpoint iteration from all-false feedback.
BoolBundle eval_structural(const Circuit& c, const BoolBundle& ins);
TraceBundle sim_structural(const Circuit& c, const TraceBundle& ins,
                           std::optional<std::size_t> ticks = std::nullopt);

// A loop-free, DFF-free circuit packaged with the claim that its clocked
// simulation is the pointwise map of its combinational evaluation.
class LiftClaim {
 public:
  const Circuit& circuit() const { return circuit_; }
  const Simulator& simulator() const { return sim_; }

  // True iff sim_clocked(ins) equals eval_combinational applied tick by tick.
  bool holds_on(const TraceBundle& ins) const;

 private:
  friend LiftClaim lift_combinational(const Circuit& c);
  LiftClaim(Circuit c, Simulator sim) : circuit_(std::move(c)), sim_(std::move(sim)) {}
  Circuit circuit_;
  Simulator sim_;
};

// Throws HasDelay if `c` has a DFF, CombinationalLoop if it has a loop.
LiftClaim lift_combinational(const Circuit& c);

}  // namespace wirekit
