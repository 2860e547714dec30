#include "wirekit/circuit.hpp"

#include <numeric>

namespace wirekit {

Circuit Circuit::atom(GateInstance gate) {
  auto n = std::make_shared<Node>(
      Node{Kind::kAtom, gate.input_shape(), gate.output_shape(), gate, {}, {}, {}});
  return Circuit(std::move(n));
}

Circuit Circuit::plug(PlugMap map) {
  auto n = std::make_shared<Node>(
      Node{Kind::kPlug, map.input(), map.output(), {}, map, {}, {}});
  return Circuit(std::move(n));
}

Circuit Circuit::ser(Circuit first, Circuit second) {
  if (!(first.output_shape() == second.input_shape())) {
    throw ShapeMismatch("ser", first.output_shape(), second.input_shape());
  }
  Shape in = first.input_shape();
  Shape out = second.output_shape();
  auto n = std::make_shared<Node>(Node{Kind::kSer, std::move(in), std::move(out), {}, {},
                                       {std::move(first), std::move(second)}, {}});
  return Circuit(std::move(n));
}

Circuit Circuit::par(Circuit top, Circuit bottom) {
  Shape in = Shape::sum(top.input_shape(), bottom.input_shape());
  Shape out = Shape::sum(top.output_shape(), bottom.output_shape());
  auto n = std::make_shared<Node>(Node{Kind::kPar, std::move(in), std::move(out), {}, {},
                                       {std::move(top), std::move(bottom)}, {}});
  return Circuit(std::move(n));
}

Circuit Circuit::loop(Circuit body) {
  const Shape& in = body.input_shape();
  const Shape& out = body.output_shape();
  if (!in.is_sum()) {
    throw ShapeMismatch("loop: body input must be a sum (n + p)",
                        Shape::sum(in, out.is_sum() ? out.right() : out), in);
  }
  if (!out.is_sum()) {
    throw ShapeMismatch("loop: body output must be a sum (m + p)",
                        Shape::sum(out, in.right()), out);
  }
  if (!(in.right() == out.right())) {
    throw ShapeMismatch("loop: feedback components differ", in.right(), out.right());
  }
  Shape n_shape = in.left();
  Shape m_shape = out.left();
  Shape p_shape = in.right();
  auto n = std::make_shared<Node>(Node{Kind::kLoop, std::move(n_shape), std::move(m_shape),
                                       {}, {}, {std::move(body)}, std::move(p_shape)});
  return Circuit(std::move(n));
}

const GateInstance& Circuit::gate() const {
  if (kind() != Kind::kAtom) throw Error("gate() on a non-atom circuit");
  return *node_->gate;
}

const PlugMap& Circuit::map() const {
  if (kind() != Kind::kPlug) throw Error("map() on a non-plug circuit");
  return *node_->map;
}

const Circuit& Circuit::first() const {
  if (node_->children.empty()) throw Error("circuit has no sub-circuits");
  return node_->children[0];
}

const Circuit& Circuit::second() const {
  if (node_->children.size() < 2) throw Error("circuit has no second sub-circuit");
  return node_->children[1];
}

const Shape& Circuit::feedback() const {
  if (kind() != Kind::kLoop) throw Error("feedback() on a non-loop circuit");
  return *node_->feedback;
}

Circuit atom(GateInstance gate) { return Circuit::atom(std::move(gate)); }
Circuit ser(Circuit first, Circuit second) {
  return Circuit::ser(std::move(first), std::move(second));
}
Circuit par(Circuit top, Circuit bottom) {
  return Circuit::par(std::move(top), std::move(bottom));
}
Circuit loop(Circuit body) { return Circuit::loop(std::move(body)); }

Circuit plug(Shape input, Shape output, PlugMap map) {
  if (!(map.input() == input)) throw ShapeMismatch("plug input", input, map.input());
  if (!(map.output() == output)) throw ShapeMismatch("plug output", output, map.output());
  return Circuit::plug(std::move(map));
}

namespace {

std::vector<std::size_t> iota(std::size_t from, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

PlugMap identity_map(const Shape& s) { return PlugMap(s, s, iota(0, s.leaf_count())); }

PlugMap fork2_map(const Shape& s) {
  return PlugMap(s, Shape::sum(s, s), concat(iota(0, s.leaf_count()), iota(0, s.leaf_count())));
}

PlugMap forget_left_map(const Shape& s, const Shape& t) {
  return PlugMap(Shape::sum(s, t), t, iota(s.leaf_count(), t.leaf_count()));
}

PlugMap forget_right_map(const Shape& s, const Shape& t) {
  return PlugMap(Shape::sum(s, t), s, iota(0, s.leaf_count()));
}

PlugMap swap_map(const Shape& s, const Shape& t) {
  return PlugMap(Shape::sum(s, t), Shape::sum(t, s),
                 concat(iota(s.leaf_count(), t.leaf_count()), iota(0, s.leaf_count())));
}

PlugMap assoc_left_map(const Shape& s, const Shape& t, const Shape& u) {
  const std::size_t n = s.leaf_count() + t.leaf_count() + u.leaf_count();
  return PlugMap(Shape::sum(s, Shape::sum(t, u)), Shape::sum(Shape::sum(s, t), u), iota(0, n));
}

PlugMap assoc_right_map(const Shape& s, const Shape& t, const Shape& u) {
  const std::size_t n = s.leaf_count() + t.leaf_count() + u.leaf_count();
  return PlugMap(Shape::sum(Shape::sum(s, t), u), Shape::sum(s, Shape::sum(t, u)), iota(0, n));
}

Circuit identity(const Shape& s) { return Circuit::plug(identity_map(s)); }
Circuit fork2(const Shape& s) { return Circuit::plug(fork2_map(s)); }
Circuit forget_left(const Shape& s, const Shape& t) {
  return Circuit::plug(forget_left_map(s, t));
}
Circuit forget_right(const Shape& s, const Shape& t) {
  return Circuit::plug(forget_right_map(s, t));
}
Circuit swap(const Shape& s, const Shape& t) { return Circuit::plug(swap_map(s, t)); }
Circuit assoc_left(const Shape& s, const Shape& t, const Shape& u) {
  return Circuit::plug(assoc_left_map(s, t, u));
}
Circuit assoc_right(const Shape& s, const Shape& t, const Shape& u) {
  return Circuit::plug(assoc_right_map(s, t, u));
}

Circuit rewire(const Shape& input, const Shape& output, std::vector<std::size_t> sources) {
  return Circuit::plug(PlugMap(input, output, std::move(sources)));
}

Circuit rewire(const Shape& input, const Shape& output,
               const std::vector<std::pair<Index, Index>>& table) {
  return Circuit::plug(PlugMap::from_indices(input, output, table));
}

Circuit reshape(const Shape& input, const Shape& output) {
  if (input.leaf_count() != output.leaf_count()) {
    throw ShapeMismatch("reshape needs equal leaf counts", input, output);
  }
  return rewire(input, output, iota(0, input.leaf_count()));
}

namespace {

Shape u(const std::string& tag) { return Shape::unit(tag); }

// ¬a = NOR(a, a)
Circuit nor_not(const std::string& a, const std::string& out) {
  return fork2(u(a)) >> atom(nor_gate(a, a, out));
}

// a ∨ b = ¬NOR(a, b)
Circuit nor_or(const std::string& a, const std::string& b, const std::string& out) {
  const std::string mid = out + "~nor";
  return atom(nor_gate(a, b, mid)) >> nor_not(mid, out);
}

// a ∧ b = NOR(¬a, ¬b)
Circuit nor_and(const std::string& a, const std::string& b, const std::string& out) {
  const std::string na = out + "~na";
  const std::string nb = out + "~nb";
  return (nor_not(a, na) & nor_not(b, nb)) >> atom(nor_gate(na, nb, out));
}

// n1 = NOR(a,b); n2 = NOR(a,n1); n3 = NOR(b,n1); xnor = NOR(n2,n3); out = ¬xnor
Circuit nor_xor(const std::string& a, const std::string& b, const std::string& out) {
  const std::string n1 = out + "~n1";
  const std::string n2 = out + "~n2";
  const std::string n3 = out + "~n3";
  const std::string xn = out + "~xnor";
  const Shape ab = Shape::sum(u(a), u(b));
  const Shape stage2_in = Shape::sum(Shape::sum(u(a), u(n1)), Shape::sum(u(b), u(n1)));
  // (n1, (a, b)) -> ((a, n1), (b, n1))
  Circuit spread = rewire(Shape::sum(u(n1), ab), stage2_in, std::vector<std::size_t>{1, 0, 2, 0});
  return fork2(ab) >> (atom(nor_gate(a, b, n1)) & identity(ab)) >> spread >>
         (atom(nor_gate(a, n1, n2)) & atom(nor_gate(b, n1, n3))) >>
         atom(nor_gate(n2, n3, xn)) >> nor_not(xn, out);
}

// sel ? t : e = (sel ∧ t) ∨ (¬sel ∧ e), then each gate NOR-expanded.
Circuit nor_mux(const std::string& sel, const std::string& t, const std::string& e,
                const std::string& out) {
  const std::string ns = out + "~ns";
  const std::string st = out + "~st";
  const std::string se = out + "~se";
  const Shape in = Shape::sum(u(sel), Shape::sum(u(t), u(e)));
  const Shape mid = Shape::sum(Shape::sum(u(sel), u(t)), Shape::sum(u(sel), u(e)));
  // (sel, (t, e)) -> ((sel, t), (sel, e))
  Circuit spread = rewire(in, mid, std::vector<std::size_t>{0, 1, 0, 2});
  Circuit negate_sel = nor_not(sel, ns) & identity(u(e));
  return spread >> (nor_and(sel, t, st) & (negate_sel >> nor_and(ns, e, se))) >>
         nor_or(st, se, out);
}

Circuit expand_gate(const GateInstance& g) {
  const auto& t = g.tags();
  switch (g.kind()) {
    case GateKind::kNor:
    case GateKind::kDff: return atom(g);
    case GateKind::kNot: return nor_not(t[0], t[1]);
    case GateKind::kOr: return nor_or(t[0], t[1], t[2]);
    case GateKind::kAnd: return nor_and(t[0], t[1], t[2]);
    case GateKind::kXor: return nor_xor(t[0], t[1], t[2]);
    case GateKind::kMux: return nor_mux(t[0], t[1], t[2], t[3]);
  }
  return atom(g);
}

}  // namespace

Circuit expand_to_nor(const Circuit& c) {
  switch (c.kind()) {
    case Circuit::Kind::kAtom: return expand_gate(c.gate());
    case Circuit::Kind::kPlug: return c;
    case Circuit::Kind::kSer: return expand_to_nor(c.first()) >> expand_to_nor(c.second());
    case Circuit::Kind::kPar: return expand_to_nor(c.first()) & expand_to_nor(c.second());
    case Circuit::Kind::kLoop: return loop(expand_to_nor(c.body()));
  }
  return c;
}

bool contains_dff(const Circuit& c) {
  switch (c.kind()) {
    case Circuit::Kind::kAtom: return is_sequential(c.gate().kind());
    case Circuit::Kind::kPlug: return false;
    case Circuit::Kind::kSer:
    case Circuit::Kind::kPar: return contains_dff(c.first()) || contains_dff(c.second());
    case Circuit::Kind::kLoop: return contains_dff(c.body());
  }
  return false;
}

bool contains_loop(const Circuit& c) {
  switch (c.kind()) {
    case Circuit::Kind::kAtom:
    case Circuit::Kind::kPlug: return false;
    case Circuit::Kind::kSer:
    case Circuit::Kind::kPar: return contains_loop(c.first()) || contains_loop(c.second());
    case Circuit::Kind::kLoop: return true;
  }
  return false;
}

std::size_t atom_count(const Circuit& c) {
  switch (c.kind()) {
    case Circuit::Kind::kAtom: return 1;
    case Circuit::Kind::kPlug: return 0;
    case Circuit::Kind::kSer:
    case Circuit::Kind::kPar: return atom_count(c.first()) + atom_count(c.second());
    case Circuit::Kind::kLoop: return atom_count(c.body());
  }
  return 0;
}

}  // namespace wirekit
