#include "wirekit/claims.hpp"

#include <random>

#include "wirekit/codec.hpp"
#include "wirekit/gates.hpp"
#include "wirekit/wordspec.hpp"

namespace wirekit {

namespace spec_fn {

Value hadd(const Value& ab) {
  auto [s, c] = spec::hadd_fn(ab.first().as_bit(), ab.second().as_bit());
  return Value::pair(Value::bit(s), Value::bit(c));
}

Value fadd(const Value& cab) {
  const Value& ab = cab.second();
  auto [s, c] = spec::fadd_fn(cab.first().as_bit(), ab.first().as_bit(), ab.second().as_bit());
  return Value::pair(Value::bit(s), Value::bit(c));
}

Value carry_add(unsigned n, const Value& cab) {
  const Value& ab = cab.second();
  auto [sum, cout] = spec::carry_add(n, spec::Word::from_value(ab.first()),
                                     spec::Word::from_value(ab.second()), cab.first().as_bit());
  return Value::pair(sum.to_value(), Value::bit(cout));
}

Value split(unsigned n, unsigned p, const Value& x) {
  const spec::Word w = spec::Word::from_value(x);
  return Value::pair(spec::low(n, p, w).to_value(), spec::high(n, p, w).to_value());
}

Value join(unsigned n, unsigned p, const Value& lohi) {
  return spec::combine(n, p, spec::Word::from_value(lohi.first()),
                       spec::Word::from_value(lohi.second()))
      .to_value();
}

Value dc(unsigned k, const Value& ab) {
  const spec::DcResult r =
      spec::dc_fn(k, spec::Word::from_value(ab.first()), spec::Word::from_value(ab.second()));
  return Value::pair(
      Value::pair(Value::pair(Value::bit(r.g), Value::bit(r.p)), r.s.to_value()),
      r.t.to_value());
}

Value mux(const Value& sxy) {
  return sxy.first().as_bit() ? sxy.second().first() : sxy.second().second();
}

}  // namespace spec_fn

namespace {

using gen::InvalidParams;
using gen::ParamSpec;
using gen::ParamValues;

constexpr std::uint64_t kDefaultSeed = 1;

ParamSpec nat(std::string name, std::string def, std::size_t max, std::string help) {
  return ParamSpec{std::move(name), ParamSpec::Kind::kNatural, std::move(def), max, {},
                   std::move(help)};
}

unsigned param(const ParamValues& v, const std::string& name) {
  return static_cast<unsigned>(gen::natural_param(v, name));
}

std::uint64_t seed_of(const ClaimOptions& o) { return o.seed.value_or(kDefaultSeed); }

// Exhaustive unless the caller asked for sampling; a bare --seed keeps the
// default mode.
CheckMode combinational_mode(const ClaimOptions& o) {
  if (!o.mode || o.mode->kind == CheckMode::Kind::kExhaustive) return CheckMode::exhaustive();
  return CheckMode::sampled(o.mode->count, seed_of(o));
}

TraceSampling trace_sampling(const ClaimOptions& o, std::size_t count, std::size_t ticks) {
  if (o.mode && o.mode->kind == CheckMode::Kind::kExhaustive) {
    throw InvalidParams("trace claims are sampled; use --mode sample:N");
  }
  return {o.mode ? o.mode->count : count, ticks, seed_of(o)};
}

std::size_t nor_samples(const ClaimOptions& o) {
  if (o.mode && o.mode->kind == CheckMode::Kind::kSampled) return o.mode->count;
  return 4096;
}

Codec adder_in(unsigned n) {
  return pair_codec(unit_codec("cin"), pair_codec(word_codec("a", n), word_codec("b", n)));
}

Codec adder_out(unsigned n) { return pair_codec(word_codec("sum", n), unit_codec("cout")); }

Codec fadd_in() {
  return pair_codec(unit_codec("cin"), pair_codec(unit_codec("a"), unit_codec("b")));
}

Codec fadd_out() { return pair_codec(unit_codec("sum"), unit_codec("cout")); }

Codec hadd_in() { return pair_codec(unit_codec("a"), unit_codec("b")); }
Codec hadd_out() { return pair_codec(unit_codec("s"), unit_codec("c")); }

Codec dc_in(unsigned k) {
  const unsigned w = 1U << k;
  return pair_codec(word_codec("a", w), word_codec("b", w));
}

Codec dc_out(unsigned k) {
  const unsigned w = 1U << k;
  return pair_codec(
      pair_codec(pair_codec(unit_codec("g"), unit_codec("p")), word_codec("s", w)),
      word_codec("t", w));
}

std::vector<bool> bits_of(const Value& v) {
  std::vector<bool> out;
  for (const Value& b : v.elements()) out.push_back(b.as_bit());
  return out;
}

std::vector<ClaimSpec> make_claims() {
  std::vector<ClaimSpec> r;

  r.push_back({"hadd_implements_hadd", "half adder against (a xor b, a and b)", {}, true,
               [](const ParamValues&, const ClaimOptions& o) {
                 return check_implements("hadd_implements_hadd", gen::hadd(), hadd_in(),
                                         hadd_out(), spec_fn::hadd, combinational_mode(o));
               }});
  r.push_back({"fadd_implements_fadd", "full adder against the boolean sum/carry formulas", {},
               true, [](const ParamValues&, const ClaimOptions& o) {
                 return check_implements("fadd_implements_fadd", gen::fadd(), fadd_in(),
                                         fadd_out(), spec_fn::fadd, combinational_mode(o));
               }});
  r.push_back({"fadd_implements_carry_add", "full adder against carry_add at width 1", {}, true,
               [](const ParamValues&, const ClaimOptions& o) {
                 const Codec in = pair_codec(
                     unit_codec("cin"), pair_codec(unit_word_codec("a"), unit_word_codec("b")));
                 const Codec out = pair_codec(unit_word_codec("sum"), unit_codec("cout"));
                 return check_implements(
                     "fadd_implements_carry_add", gen::fadd(), in, out,
                     [](const Value& v) { return spec_fn::carry_add(1, v); },
                     combinational_mode(o));
               }});
  r.push_back({"hl_implements_split", "hl(n, p) splits a word into low and high parts",
               {nat("n", "2", 12, "low width"), nat("p", "2", 12, "high width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned n = param(v, "n"), p = param(v, "p");
                 return check_implements(
                     "hl_implements_split", gen::hl("x", n, p), word_codec("x", n + p),
                     pair_codec(word_codec("x", n), word_codec("x", p)),
                     [n, p](const Value& x) { return spec_fn::split(n, p, x); },
                     combinational_mode(o));
               }});
  r.push_back({"combine_implements_join", "combine(n, p) joins low and high parts",
               {nat("n", "2", 12, "low width"), nat("p", "2", 12, "high width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned n = param(v, "n"), p = param(v, "p");
                 return check_implements(
                     "combine_implements_join", gen::combine("x", n, p),
                     pair_codec(word_codec("x", n), word_codec("x", p)), word_codec("x", n + p),
                     [n, p](const Value& x) { return spec_fn::join(n, p, x); },
                     combinational_mode(o));
               }});
  r.push_back({"ripple_implements_carry_add", "ripple(n) against carry_add(n)",
               {nat("n", "4", 32, "operand width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned n = param(v, "n");
                 return check_implements(
                     "ripple_implements_carry_add", gen::ripple(n), adder_in(n), adder_out(n),
                     [n](const Value& x) { return spec_fn::carry_add(n, x); },
                     combinational_mode(o));
               }});
  r.push_back({"add_parts", "low-then-high chained addition equals the wide addition",
               {nat("n", "2", 8, "low width"), nat("m", "2", 8, "high width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 return check_add_parts(param(v, "n"), param(v, "m"), combinational_mode(o));
               }});
  r.push_back({"dc_implements_dc", "divide-and-conquer adder dc(k) against dc_fn(k)",
               {nat("k", "2", 5, "log2 of operand width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned k = param(v, "k");
                 return check_implements(
                     "dc_implements_dc", gen::dc(k), dc_in(k), dc_out(k),
                     [k](const Value& x) { return spec_fn::dc(k, x); }, combinational_mode(o));
               }});
  r.push_back({"muxn_implements_select", "muxn(k) against sel ? x : y",
               {nat("k", "4", 10, "bus width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned k = param(v, "k");
                 const Codec in = pair_codec(unit_codec("sel"),
                                             pair_codec(word_codec("x", k), word_codec("y", k)));
                 return check_implements("muxn_implements_select", gen::muxn(k), in,
                                         word_codec("out", k), spec_fn::mux,
                                         combinational_mode(o));
               }});
  r.push_back({"composen_iterates", "k inverter banks in series invert k times",
               {nat("w", "4", 16, "bank width"), nat("k", "3", 64, "copies")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned w = param(v, "w"), k = param(v, "k");
                 const Circuit bank = gen::map(atom(not_gate("x", "x")), w);
                 return check_implements(
                     "composen_iterates", gen::composen(bank, k), word_codec("x", w),
                     word_codec("x", w),
                     [w, k](const Value& x) {
                       const std::uint64_t mask = w == 64 ? ~std::uint64_t{0}
                                                          : (std::uint64_t{1} << w) - 1;
                       return k % 2 ? Value::word(w, ~x.val() & mask) : x;
                     },
                     combinational_mode(o));
               }});
  r.push_back({"map_implements_map", "k half adders in parallel map hadd over a vector",
               {nat("k", "3", 10, "copies")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned k = param(v, "k");
                 return check_implements(
                     "map_implements_map", gen::map(gen::hadd(), k), vec_codec(hadd_in(), k),
                     vec_codec(hadd_out(), k),
                     [](const Value& xs) {
                       std::vector<Value> out;
                       for (const Value& x : xs.elements()) out.push_back(spec_fn::hadd(x));
                       return Value::vec(std::move(out));
                     },
                     combinational_mode(o));
               }});
  r.push_back({"dff_implements_pre", "a DFF outputs false, then its input delayed one tick",
               {nat("ticks", "32", 4096, "trace length")}, false,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const std::size_t t = param(v, "ticks");
                 const StreamCodec s(unit_codec("x"), t);
                 return check_realise_trace(
                     "dff_implements_pre", atom(dff_gate("x", "x")), s, s,
                     [](const Value& ins, const Value& outs) {
                       return outs == spec::pre_fn(Value::bit(false), ins);
                     },
                     trace_sampling(o, 200, t));
               }});
  r.push_back({"fifo_implements_fifo", "fifo(n, k) delays a k-bit stream by n ticks",
               {nat("n", "2", 64, "depth"), nat("k", "2", 64, "width"),
                nat("ticks", "32", 4096, "trace length")},
               false, [](const ParamValues& v, const ClaimOptions& o) {
                 const std::size_t n = param(v, "n"), k = param(v, "k"), t = param(v, "ticks");
                 const StreamCodec s = stream_vec_codec("x", k, t);
                 return check_realise_trace(
                     "fifo_implements_fifo", gen::fifo("x", n, k), s, s,
                     [n, k](const Value& ins, const Value& outs) {
                       std::vector<spec::BitVector> trace;
                       for (const Value& sample : ins.elements()) trace.push_back(bits_of(sample));
                       const auto expected = spec::fifo_fn(n, k, trace);
                       if (expected.size() != outs.length()) return false;
                       for (std::size_t i = 0; i < expected.size(); ++i) {
                         if (bits_of(outs.elements()[i]) != expected[i]) return false;
                       }
                       return true;
                     },
                     trace_sampling(o, 200, t));
               }});
  r.push_back({"register_realise", "register output follows the load/hold recurrence",
               {nat("ticks", "64", 4096, "trace length")}, false,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const std::size_t t = param(v, "ticks");
                 const StreamCodec in(pair_codec(unit_codec("load"), unit_codec("a")), t);
                 const StreamCodec out(unit_codec("out"), t);
                 return check_realise_trace(
                     "register_realise", gen::reg(), in, out,
                     [](const Value& ins, const Value& outs) {
                       std::vector<std::pair<bool, bool>> pairs;
                       for (const Value& s : ins.elements()) {
                         pairs.emplace_back(s.first().as_bit(), s.second().as_bit());
                       }
                       BitTrace o;
                       for (const Value& s : outs.elements()) o.push_back(s.as_bit());
                       return spec::register_relation_holds(pairs, o);
                     },
                     trace_sampling(o, 1000, t));
               }});

  const ParamSpec ticks32 = nat("ticks", "32", 4096, "trace length");
  r.push_back({"lift_hadd", "clocked half adder is the pointwise half adder", {ticks32}, false,
               [](const ParamValues& v, const ClaimOptions& o) {
                 return check_lift("lift_hadd", gen::hadd(), spec_fn::hadd, hadd_in(),
                                   hadd_out(), trace_sampling(o, 100, param(v, "ticks")));
               }});
  r.push_back({"lift_fadd", "clocked full adder is the pointwise full adder", {ticks32}, false,
               [](const ParamValues& v, const ClaimOptions& o) {
                 return check_lift("lift_fadd", gen::fadd(), spec_fn::fadd, fadd_in(),
                                   fadd_out(), trace_sampling(o, 100, param(v, "ticks")));
               }});
  r.push_back({"lift_ripple", "clocked ripple(n) is pointwise carry_add(n)",
               {nat("n", "2", 32, "operand width"), ticks32}, false,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned n = param(v, "n");
                 return check_lift(
                     "lift_ripple", gen::ripple(n),
                     [n](const Value& x) { return spec_fn::carry_add(n, x); }, adder_in(n),
                     adder_out(n), trace_sampling(o, 100, param(v, "ticks")));
               }});
  r.push_back({"lift_dc", "clocked dc(k) is pointwise dc_fn(k)",
               {nat("k", "1", 5, "log2 of operand width"), ticks32}, false,
               [](const ParamValues& v, const ClaimOptions& o) {
                 const unsigned k = param(v, "k");
                 return check_lift(
                     "lift_dc", gen::dc(k), [k](const Value& x) { return spec_fn::dc(k, x); },
                     dc_in(k), dc_out(k), trace_sampling(o, 100, param(v, "ticks")));
               }});

  std::vector<std::string> gate_names;
  for (GateKind k : kAllGateKinds) gate_names.emplace_back(gate_name(k));
  r.push_back({"nor_equiv_gate", "a gate equals its NOR-only expansion",
               {ParamSpec{"kind", ParamSpec::Kind::kText, "XOR", 0, gate_names, "gate kind"}},
               true, [](const ParamValues& v, const ClaimOptions& o) {
                 return check_nor_equiv("nor_equiv_gate", gen::build("gate", v), nor_samples(o),
                                        seed_of(o));
               }});
  r.push_back({"nor_equiv_fadd", "the full adder equals its NOR-only expansion", {}, true,
               [](const ParamValues&, const ClaimOptions& o) {
                 return check_nor_equiv("nor_equiv_fadd", gen::fadd(), nor_samples(o),
                                        seed_of(o));
               }});
  r.push_back({"nor_equiv_ripple", "ripple(n) equals its NOR-only expansion",
               {nat("n", "4", 32, "operand width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 return check_nor_equiv("nor_equiv_ripple", gen::ripple(param(v, "n")),
                                        nor_samples(o), seed_of(o));
               }});
  r.push_back({"nor_equiv_dc", "dc(k) equals its NOR-only expansion",
               {nat("k", "2", 5, "log2 of operand width")}, true,
               [](const ParamValues& v, const ClaimOptions& o) {
                 return check_nor_equiv("nor_equiv_dc", gen::dc(param(v, "k")), nor_samples(o),
                                        seed_of(o));
               }});
  return r;
}

}  // namespace

CheckReport check_add_parts(unsigned n, unsigned m, CheckMode mode) {
  if (n == 0 || m == 0 || n + m > Value::kMaxWordWidth) {
    throw InvalidParams("add_parts needs 1 <= n, 1 <= m, n + m <= 64");
  }
  const unsigned bits = 2 * (n + m) + 1;
  CheckReport report{"add_parts", mode, 0, 0, 0, {}};
  auto check_one = [&](std::uint64_t x) {
    auto take = [&x](unsigned w) {
      const std::uint64_t v = w == 64 ? x : x & ((std::uint64_t{1} << w) - 1);
      x = w == 64 ? 0 : x >> w;
      return spec::Word(w, v);
    };
    const bool cin = x & 1U;
    x >>= 1;
    const spec::Word xl = take(n), yl = take(n), xh = take(m), yh = take(m);
    ++report.total_cases;
    if (!spec::add_parts_holds(n, m, xl, yl, xh, yh, cin)) {
      const Value input = Value::vec({Value::bit(cin), xl.to_value(), yl.to_value(),
                                      xh.to_value(), yh.to_value()});
      record_failure(report, {input, Value::bit(true), Value::bit(false)});
    }
  };
  if (mode.kind == CheckMode::Kind::kExhaustive) {
    if (bits > 24) throw DomainTooLarge("add_parts: domain too large for an exhaustive check");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) check_one(x);
  } else {
    if (bits > 64) throw InvalidParams("add_parts sampling supports n + m <= 31");
    std::mt19937_64 rng(mode.seed);
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (std::size_t i = 0; i < mode.count; ++i) check_one(rng() & mask);
  }
  return report;
}

const std::vector<ClaimSpec>& claims() {
  static const std::vector<ClaimSpec> r = make_claims();
  return r;
}

const ClaimSpec* find_claim(const std::string& name) {
  for (const auto& c : claims()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckReport run_claim(const std::string& name, const gen::ParamValues& params,
                      const ClaimOptions& options) {
  const ClaimSpec* spec = find_claim(name);
  if (!spec) throw InvalidParams("unknown claim '" + name + "'");
  return spec->run(gen::resolve_params(spec->name, spec->params, params), options);
}

}  // namespace wirekit
