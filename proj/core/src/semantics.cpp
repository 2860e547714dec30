#include "wirekit/semantics.hpp"

#include <array>
#include <deque>
#include <unordered_set>

#include "wirekit/codec.hpp"
#include "wirekit/plug_map.hpp"

namespace wirekit {

namespace {

// A wire during elaboration: a primary input, a gate output, or a loop
// feedback placeholder that is bound once the loop body is elaborated.
struct Ref {
  enum class Kind { kInput, kGate, kFeedback };
  Kind kind;
  std::size_t index;
};

class Elaborator {
 public:
  Netlist run(const Circuit& c) {
    Netlist nl;
    const Shape& in = c.input_shape();
    const Shape& out = c.output_shape();
    std::vector<Ref> ins;
    const auto in_paths = enumerate_indices(in);
    const auto in_tags = leaf_tags(in);
    for (std::size_t i = 0; i < in.leaf_count(); ++i) {
      nl.inputs.push_back(Port{i, in_paths[i], in_tags[i]});
      ins.push_back(Ref{Ref::Kind::kInput, i});
    }
    std::vector<Ref> outs = walk(c, std::move(ins));
    const auto out_paths = enumerate_indices(out);
    const auto out_tags = leaf_tags(out);
    for (std::size_t o = 0; o < out.leaf_count(); ++o) {
      nl.outputs.push_back(Port{o, out_paths[o], out_tags[o]});
      nl.output_drivers.push_back(resolve(outs[o]));
    }
    for (Pending& g : gates_) {
      NetlistGate ng{nl.gates.size(), g.kind, g.name, {}};
      for (const Ref& r : g.inputs) ng.inputs.push_back(resolve(r));
      nl.gates.push_back(std::move(ng));
    }
    return nl;
  }

 private:
  struct Pending {
    GateKind kind;
    std::string name;
    std::vector<Ref> inputs;
  };

  std::vector<Ref> walk(const Circuit& c, std::vector<Ref> ins) {
    switch (c.kind()) {
      case Circuit::Kind::kAtom: {
        const std::size_t id = gates_.size();
        gates_.push_back(Pending{c.gate().kind(),
                                 c.gate().output_tag() + "#" + std::to_string(id),
                                 std::move(ins)});
        return {Ref{Ref::Kind::kGate, id}};
      }
      case Circuit::Kind::kPlug: {
        std::vector<Ref> outs;
        outs.reserve(c.map().sources().size());
        for (std::size_t src : c.map().sources()) outs.push_back(ins[src]);
        return outs;
      }
      case Circuit::Kind::kSer:
        return walk(c.second(), walk(c.first(), std::move(ins)));
      case Circuit::Kind::kPar: {
        const std::size_t n = c.first().input_shape().leaf_count();
        std::vector<Ref> top(ins.begin(), ins.begin() + n);
        std::vector<Ref> bottom(ins.begin() + n, ins.end());
        std::vector<Ref> outs = walk(c.first(), std::move(top));
        std::vector<Ref> rest = walk(c.second(), std::move(bottom));
        outs.insert(outs.end(), rest.begin(), rest.end());
        return outs;
      }
      case Circuit::Kind::kLoop: {
        const std::size_t p = c.feedback().leaf_count();
        const std::size_t first_slot = feedback_.size();
        for (std::size_t j = 0; j < p; ++j) {
          feedback_.push_back(std::nullopt);
          ins.push_back(Ref{Ref::Kind::kFeedback, first_slot + j});
        }
        std::vector<Ref> outs = walk(c.body(), std::move(ins));
        const std::size_t m = outs.size() - p;
        for (std::size_t j = 0; j < p; ++j) feedback_[first_slot + j] = outs[m + j];
        outs.resize(m);
        return outs;
      }
    }
    return {};
  }

  Driver resolve(Ref r) const {
    std::unordered_set<std::size_t> seen;
    while (r.kind == Ref::Kind::kFeedback) {
      if (!seen.insert(r.index).second || !feedback_[r.index]) {
        throw CombinationalLoop("a feedback wire is only driven by itself through plugs");
      }
      r = *feedback_[r.index];
    }
    return r.kind == Ref::Kind::kInput ? Driver::input(r.index) : Driver::gate(r.index);
  }

  std::vector<Pending> gates_;
  std::vector<std::optional<Ref>> feedback_;
};

}  // namespace

Netlist elaborate(const Circuit& c) { return Elaborator{}.run(c); }

std::vector<std::size_t> combinational_order(const Netlist& nl) {
  const std::size_t n = nl.gates.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> consumers(n);
  std::deque<std::size_t> ready;
  std::size_t combinational = 0;
  for (const NetlistGate& g : nl.gates) {
    if (is_sequential(g.kind)) continue;
    ++combinational;
    for (const Driver& d : g.inputs) {
      if (d.kind == Driver::Kind::kGate && !is_sequential(nl.gates.at(d.index).kind)) {
        ++pending[g.id];
        consumers[d.index].push_back(g.id);
      }
    }
    if (pending[g.id] == 0) ready.push_back(g.id);
  }
  std::vector<std::size_t> order;
  order.reserve(combinational);
  while (!ready.empty()) {
    const std::size_t g = ready.front();
    ready.pop_front();
    order.push_back(g);
    for (std::size_t next : consumers[g]) {
      if (--pending[next] == 0) ready.push_back(next);
    }
  }
  if (order.size() != combinational) {
    for (std::size_t g = 0; g < n; ++g) {
      if (!is_sequential(nl.gates[g].kind) && pending[g] != 0) {
        throw CombinationalLoop("DFF-free cycle through gate " + nl.gates[g].name);
      }
    }
  }
  return order;
}

Simulator::Simulator(Netlist netlist) : netlist_(std::move(netlist)) {
  netlist_.validate();
  auto to_ref = [](const Driver& d) {
    return Ref{d.kind == Driver::Kind::kInput, d.index};
  };
  gate_inputs_.resize(netlist_.gates.size());
  for (const NetlistGate& g : netlist_.gates) {
    for (const Driver& d : g.inputs) gate_inputs_[g.id].push_back(to_ref(d));
    if (is_sequential(g.kind)) dffs_.push_back(g.id);
  }
  for (const Driver& d : netlist_.output_drivers) output_refs_.push_back(to_ref(d));
  order_ = combinational_order(netlist_);
}

void Simulator::settle(const std::vector<bool>& in, std::vector<bool>& val) const {
  std::array<bool, 3> args{};
  for (std::size_t g : order_) {
    const auto& refs = gate_inputs_[g];
    for (std::size_t k = 0; k < refs.size(); ++k) args[k] = read(refs[k], in, val);
    val[g] = bool_sem(netlist_.gates[g].kind, std::span<const bool>(args.data(), refs.size()));
  }
}

std::vector<bool> Simulator::eval(const std::vector<bool>& inputs) const {
  if (has_delay()) throw HasDelay("combinational evaluation of a netlist with DFFs");
  if (inputs.size() != input_count()) {
    throw LengthMismatch("expected " + std::to_string(input_count()) + " inputs, got " +
                         std::to_string(inputs.size()));
  }
  std::vector<bool> val(netlist_.gates.size());
  settle(inputs, val);
  std::vector<bool> out(output_refs_.size());
  for (std::size_t o = 0; o < out.size(); ++o) out[o] = read(output_refs_[o], inputs, val);
  return out;
}

std::vector<BitTrace> Simulator::run(const std::vector<BitTrace>& inputs,
                                     std::size_t ticks) const {
  if (inputs.size() != input_count()) {
    throw LengthMismatch("expected " + std::to_string(input_count()) + " input traces, got " +
                         std::to_string(inputs.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() != ticks) {
      throw LengthMismatch("input trace " + std::to_string(i) + " has length " +
                           std::to_string(inputs[i].size()) + ", expected " +
                           std::to_string(ticks));
    }
  }
  std::vector<bool> state(netlist_.gates.size(), kDffInitialState);
  std::vector<bool> val(netlist_.gates.size());
  std::vector<bool> in(inputs.size());
  std::vector<BitTrace> out(output_refs_.size(), BitTrace(ticks));
  for (std::size_t t = 0; t < ticks; ++t) {
    for (std::size_t i = 0; i < inputs.size(); ++i) in[i] = inputs[i][t];
    for (std::size_t d : dffs_) val[d] = state[d];
    settle(in, val);
    for (std::size_t o = 0; o < out.size(); ++o) out[o][t] = read(output_refs_[o], in, val);
    for (std::size_t d : dffs_) {
      state[d] = dff_step(state[d], read(gate_inputs_[d][0], in, val)).next_state;
    }
  }
  return out;
}

BoolBundle eval_combinational(const Circuit& c, const BoolBundle& ins) {
  if (!(ins.shape() == c.input_shape())) {
    throw ShapeMismatch("eval_combinational input", c.input_shape(), ins.shape());
  }
  if (contains_dff(c)) throw HasDelay("eval_combinational on a circuit with a DFF");
  Simulator sim(elaborate(c));
  return BoolBundle(c.output_shape(), sim.eval(ins.values()));
}

TraceBundle sim_clocked(const Circuit& c, const TraceBundle& ins,
                        std::optional<std::size_t> ticks) {
  if (!(ins.shape() == c.input_shape())) {
    throw ShapeMismatch("sim_clocked input", c.input_shape(), ins.shape());
  }
  const std::size_t len = trace_length(ins, ticks.value_or(0));
  if (ticks && ins.size() != 0 && *ticks != len) {
    throw LengthMismatch("traces have length " + std::to_string(len) + ", asked for " +
                         std::to_string(*ticks) + " ticks");
  }
  Simulator sim(elaborate(c));
  return TraceBundle(c.output_shape(), sim.run(ins.values(), len));
}

namespace {

constexpr std::size_t kMaxEnumeratedFeedback = 16;

BoolBundle structural(const Circuit& c, const BoolBundle& ins) {
  switch (c.kind()) {
    case Circuit::Kind::kAtom: {
      const auto& v = ins.values();
      std::array<bool, 3> args{};
      std::copy(v.begin(), v.end(), args.begin());
      const bool out = bool_sem(c.gate().kind(), std::span<const bool>(args.data(), v.size()));
      return BoolBundle(c.output_shape(), std::vector<bool>{out});
    }
    case Circuit::Kind::kPlug: return bundle_precompose(c.map(), ins);
    case Circuit::Kind::kSer: {
      BoolBundle middle = structural(c.first(), ins);
      return structural(c.second(), middle);
    }
    case Circuit::Kind::kPar:
      return bundle_append(structural(c.first(), bundle_left(ins)),
                           structural(c.second(), bundle_right(ins)));
    case Circuit::Kind::kLoop: {
      const Shape& p = c.feedback();
      if (p.leaf_count() > kMaxEnumeratedFeedback) {
        throw DomainTooLarge("loop feedback of " + std::to_string(p.leaf_count()) +
                             " wires is too wide to enumerate");
      }
      std::optional<BoolBundle> solution;
      const std::uint64_t total = std::uint64_t{1} << p.leaf_count();
      for (std::uint64_t r = 0; r < total; ++r) {
        std::vector<bool> bits(p.leaf_count());
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (r >> i) & 1U;
        BoolBundle fb(p, std::move(bits));
        BoolBundle out = structural(c.body(), bundle_append(ins, fb));
        if (!(bundle_right(out).values() == fb.values())) continue;
        BoolBundle visible = bundle_left(out);
        if (solution && !(*solution == visible)) {
          throw CombinationalLoop("loop has several consistent feedback values with "
                                  "different outputs");
        }
        solution = std::move(visible);
      }
      if (!solution) throw CombinationalLoop("loop has no consistent feedback value");
      return *solution;
    }
  }
  throw Error("unreachable");
}

TraceBundle structural_stream(const Circuit& c, const TraceBundle& ins, std::size_t ticks) {
  switch (c.kind()) {
    case Circuit::Kind::kAtom: {
      const GateKind kind = c.gate().kind();
      BitTrace out(ticks);
      if (is_sequential(kind)) {
        // pre false
        for (std::size_t t = 0; t < ticks; ++t) {
          out[t] = t == 0 ? kDffInitialState : ins.at(0)[t - 1];
        }
      } else {
        std::array<bool, 3> args{};
        for (std::size_t t = 0; t < ticks; ++t) {
          for (std::size_t k = 0; k < ins.size(); ++k) args[k] = ins.at(k)[t];
          out[t] = bool_sem(kind, std::span<const bool>(args.data(), ins.size()));
        }
      }
      return TraceBundle(c.output_shape(), std::vector<BitTrace>{std::move(out)});
    }
    case Circuit::Kind::kPlug: return bundle_precompose(c.map(), ins);
    case Circuit::Kind::kSer:
      return structural_stream(c.second(), structural_stream(c.first(), ins, ticks), ticks);
    case Circuit::Kind::kPar:
      return bundle_append(structural_stream(c.first(), bundle_left(ins), ticks),
                           structural_stream(c.second(), bundle_right(ins), ticks));
    case Circuit::Kind::kLoop: {
      // Each round fixes at least one more tick when every feedback path is
      // delayed, so ticks + 1 rounds reach the fixpoint.
      TraceBundle fb = TraceBundle::filled(c.feedback(), BitTrace(ticks, false));
      for (std::size_t round = 0; round <= ticks + 1; ++round) {
        TraceBundle out = structural_stream(c.body(), bundle_append(ins, fb), ticks);
        TraceBundle next = bundle_right(out);
        if (next == fb) return bundle_left(out);
        fb = std::move(next);
      }
      throw CombinationalLoop("stream loop feedback does not converge");
    }
  }
  throw Error("unreachable");
}

}  // namespace

BoolBundle eval_structural(const Circuit& c, const BoolBundle& ins) {
  if (!(ins.shape() == c.input_shape())) {
    throw ShapeMismatch("eval_structural input", c.input_shape(), ins.shape());
  }
  if (contains_dff(c)) throw HasDelay("eval_structural on a circuit with a DFF");
  return structural(c, ins);
}

TraceBundle sim_structural(const Circuit& c, const TraceBundle& ins,
                           std::optional<std::size_t> ticks) {
  if (!(ins.shape() == c.input_shape())) {
    throw ShapeMismatch("sim_structural input", c.input_shape(), ins.shape());
  }
  const std::size_t len = trace_length(ins, ticks.value_or(0));
  return structural_stream(c, ins, len);
}

bool LiftClaim::holds_on(const TraceBundle& ins) const {
  const std::size_t len = trace_length(ins);
  const std::vector<BitTrace> streamed = sim_.run(ins.values(), len);
  for (std::size_t t = 0; t < len; ++t) {
    const std::vector<bool> point = sim_.eval(slice_at(ins, t).values());
    for (std::size_t o = 0; o < point.size(); ++o) {
      if (streamed[o][t] != point[o]) return false;
    }
  }
  return true;
}

LiftClaim lift_combinational(const Circuit& c) {
  if (contains_dff(c)) throw HasDelay("only delay-free circuits can be lifted");
  if (contains_loop(c)) throw CombinationalLoop("only loop-free circuits can be lifted");
  return LiftClaim(c, Simulator(elaborate(c)));
}

}  // namespace wirekit
