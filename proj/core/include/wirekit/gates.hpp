#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wirekit/shape.hpp"

namespace wirekit {

enum class GateKind { kNor, kNot, kAnd, kOr, kXor, kMux, kDff };

inline constexpr GateKind kAllGateKinds[] = {GateKind::kNor, GateKind::kNot, GateKind::kAnd,
                                             GateKind::kOr,  GateKind::kXor, GateKind::kMux,
                                             GateKind::kDff};

std::string_view gate_name(GateKind kind);  // "NOR", "AND", ...
std::optional<GateKind> parse_gate_kind(std::string_view name);

std::size_t input_arity(GateKind kind);
inline constexpr std::size_t output_arity(GateKind) { return 1; }
inline constexpr bool is_sequential(GateKind kind) { return kind == GateKind::kDff; }

// A gate with its wires named. Tags list the inputs in order, then the
// output; MUX inputs are (select, then, else).
class GateInstance {
 public:
  // Throws ArityMismatch if the tag count is not arity + 1.
  GateInstance(GateKind kind, std::vector<std::string> tags);

  GateKind kind() const { return kind_; }
  const std::vector<std::string>& tags() const { return tags_; }
  const std::string& output_tag() const { return tags_.back(); }

  Shape input_shape() const;
  Shape output_shape() const;

  friend bool operator==(const GateInstance&, const GateInstance&) = default;

 private:
  GateKind kind_;
  std::vector<std::string> tags_;
};

GateInstance nor_gate(std::string a, std::string b, std::string out);
GateInstance not_gate(std::string a, std::string out);
GateInstance and_gate(std::string a, std::string b, std::string out);
GateInstance or_gate(std::string a, std::string b, std::string out);
GateInstance xor_gate(std::string a, std::string b, std::string out);
GateInstance mux_gate(std::string sel, std::string then_in, std::string else_in,
                      std::string out);
GateInstance dff_gate(std::string in, std::string out);

// Truth table of a combinational gate. Throws SequentialGate for DFF and
// ArityMismatch on a wrong input count.
bool bool_sem(GateKind kind, std::span<const bool> inputs);

struct DffStep {
  bool output;
  bool next_state;
};

// One clock tick of a DFF holding `state`.
inline constexpr DffStep dff_step(bool state, bool input) { return {state, input}; }
inline constexpr bool kDffInitialState = false;

}  // namespace wirekit
