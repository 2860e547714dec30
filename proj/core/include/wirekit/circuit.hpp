#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "wirekit/gates.hpp"
#include "wirekit/plug_map.hpp"
#include "wirekit/shape.hpp"

namespace wirekit {

// Deep-embedded circuit: Atom, Plug, Ser, Par or Loop, indexed by its input
// and output shapes. Every constructor checks shapes, so an ill-shaped value
// cannot be built. Immutable; copies share structure.
class Circuit {
 public:
  enum class Kind { kAtom, kPlug, kSer, kPar, kLoop };

  static Circuit atom(GateInstance gate);
  static Circuit plug(PlugMap map);
  // Throws ShapeMismatch unless first.output_shape() == second.input_shape().
  static Circuit ser(Circuit first, Circuit second);
  static Circuit par(Circuit top, Circuit bottom);
  // body : n + p -> m + p; the result is n -> m with p fed back.
  static Circuit loop(Circuit body);

  Kind kind() const { return node_->kind; }
  const Shape& input_shape() const { return node_->input; }
  const Shape& output_shape() const { return node_->output; }

  const GateInstance& gate() const;
  const PlugMap& map() const;
  const Circuit& first() const;   // Ser first, Par top, Loop body
  const Circuit& second() const;  // Ser second, Par bottom
  const Circuit& body() const { return first(); }
  const Shape& feedback() const;  // Loop only

  bool same_node(const Circuit& other) const { return node_ == other.node_; }

 private:
  struct Node {
    Kind kind;
    Shape input;
    Shape output;
    std::optional<GateInstance> gate;
    std::optional<PlugMap> map;
    std::vector<Circuit> children;
    std::optional<Shape> feedback;
  };
  explicit Circuit(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Circuit operator>>(Circuit a, Circuit b) {
  return Circuit::ser(std::move(a), std::move(b));
}
inline Circuit operator&(Circuit a, Circuit b) {
  return Circuit::par(std::move(a), std::move(b));
}

Circuit atom(GateInstance gate);
Circuit ser(Circuit first, Circuit second);
Circuit par(Circuit top, Circuit bottom);
Circuit loop(Circuit body);
Circuit plug(Shape input, Shape output, PlugMap map);

// Canonical plugs, fixed by their shapes alone.
PlugMap identity_map(const Shape& s);
PlugMap fork2_map(const Shape& s);                          // s -> s + s
PlugMap forget_left_map(const Shape& s, const Shape& t);    // s + t -> t
PlugMap forget_right_map(const Shape& s, const Shape& t);   // s + t -> s
PlugMap swap_map(const Shape& s, const Shape& t);           // s + t -> t + s
PlugMap assoc_left_map(const Shape& s, const Shape& t, const Shape& u);   // s+(t+u) -> (s+t)+u
PlugMap assoc_right_map(const Shape& s, const Shape& t, const Shape& u);  // (s+t)+u -> s+(t+u)

Circuit identity(const Shape& s);
Circuit fork2(const Shape& s);
Circuit forget_left(const Shape& s, const Shape& t);
Circuit forget_right(const Shape& s, const Shape& t);
Circuit swap(const Shape& s, const Shape& t);
Circuit assoc_left(const Shape& s, const Shape& t, const Shape& u);
Circuit assoc_right(const Shape& s, const Shape& t, const Shape& u);

// Rewiring from an explicit table: entry o is the input position read by
// output leaf o. Throws InvalidMap for partial or out-of-range tables.
Circuit rewire(const Shape& input, const Shape& output, std::vector<std::size_t> sources);
Circuit rewire(const Shape& input, const Shape& output,
               const std::vector<std::pair<Index, Index>>& table);

// Same leaves in the same canonical order under a different tree: the
// position-preserving plug between two shapes with equal leaf counts.
Circuit reshape(const Shape& input, const Shape& output);

// Every combinational atom replaced by a NOR-only subcircuit with the same
// interface; DFF atoms are kept.
Circuit expand_to_nor(const Circuit& c);

// Structural queries.
bool contains_dff(const Circuit& c);
bool contains_loop(const Circuit& c);
std::size_t atom_count(const Circuit& c);

}  // namespace wirekit
