#include "wirekit/gates.hpp"

#include "wirekit/errors.hpp"

namespace wirekit {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kNor: return "NOR";
    case GateKind::kNot: return "NOT";
    case GateKind::kAnd: return "AND";
    case GateKind::kOr: return "OR";
    case GateKind::kXor: return "XOR";
    case GateKind::kMux: return "MUX";
    case GateKind::kDff: return "DFF";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (GateKind k : kAllGateKinds) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

std::size_t input_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
    case GateKind::kDff: return 1;
    case GateKind::kMux: return 3;
    default: return 2;
  }
}

GateInstance::GateInstance(GateKind kind, std::vector<std::string> tags)
    : kind_(kind), tags_(std::move(tags)) {
  if (tags_.size() != input_arity(kind_) + 1) {
    throw ArityMismatch(std::string(gate_name(kind_)) + " takes " +
                        std::to_string(input_arity(kind_) + 1) + " tags, got " +
                        std::to_string(tags_.size()));
  }
}

Shape GateInstance::input_shape() const {
  switch (input_arity(kind_)) {
    case 1: return Shape::unit(tags_[0]);
    case 2: return Shape::sum(Shape::unit(tags_[0]), Shape::unit(tags_[1]));
    default:
      return Shape::sum(Shape::unit(tags_[0]),
                        Shape::sum(Shape::unit(tags_[1]), Shape::unit(tags_[2])));
  }
}

Shape GateInstance::output_shape() const { return Shape::unit(tags_.back()); }

GateInstance nor_gate(std::string a, std::string b, std::string out) {
  return GateInstance(GateKind::kNor, {std::move(a), std::move(b), std::move(out)});
}
GateInstance not_gate(std::string a, std::string out) {
  return GateInstance(GateKind::kNot, {std::move(a), std::move(out)});
}
GateInstance and_gate(std::string a, std::string b, std::string out) {
  return GateInstance(GateKind::kAnd, {std::move(a), std::move(b), std::move(out)});
}
GateInstance or_gate(std::string a, std::string b, std::string out) {
  return GateInstance(GateKind::kOr, {std::move(a), std::move(b), std::move(out)});
}
GateInstance xor_gate(std::string a, std::string b, std::string out) {
  return GateInstance(GateKind::kXor, {std::move(a), std::move(b), std::move(out)});
}
GateInstance mux_gate(std::string sel, std::string then_in, std::string else_in,
                      std::string out) {
  return GateInstance(GateKind::kMux, {std::move(sel), std::move(then_in),
                                       std::move(else_in), std::move(out)});
}
GateInstance dff_gate(std::string in, std::string out) {
  return GateInstance(GateKind::kDff, {std::move(in), std::move(out)});
}

bool bool_sem(GateKind kind, std::span<const bool> in) {
  if (is_sequential(kind)) throw SequentialGate("DFF has no combinational truth table");
  if (in.size() != input_arity(kind)) {
    throw ArityMismatch(std::string(gate_name(kind)) + " expects " +
                        std::to_string(input_arity(kind)) + " inputs, got " +
                        std::to_string(in.size()));
  }
  switch (kind) {
    case GateKind::kNor: return !(in[0] || in[1]);
    case GateKind::kNot: return !in[0];
    case GateKind::kAnd: return in[0] && in[1];
    case GateKind::kOr: return in[0] || in[1];
    case GateKind::kXor: return in[0] != in[1];
    case GateKind::kMux: return in[0] ? in[1] : in[2];
    case GateKind::kDff: break;
  }
  return false;
}

}  // namespace wirekit
