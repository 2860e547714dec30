#include "wirekit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace wirekit::gen {

namespace {

using Positions = std::vector<std::size_t>;

Shape u(const std::string& tag) { return Shape::unit(tag); }
Shape bus(const std::string& tag, std::size_t n) { return Shape::sumn(u(tag), n); }

Positions range(std::size_t from, std::size_t n) {
  Positions v(n);
  std::iota(v.begin(), v.end(), from);
  return v;
}

Positions cat(std::initializer_list<Positions> parts) {
  Positions out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Rewires `c`'s output into `next`'s input with the given table.
Circuit then_rewire(Circuit c, const Shape& into, Positions sources) {
  Shape from = c.output_shape();
  return std::move(c) >> rewire(from, into, std::move(sources));
}

Circuit then_reshape(Circuit c, const Shape& into) {
  Shape from = c.output_shape();
  return std::move(c) >> reshape(from, into);
}

}  // namespace

Circuit hadd(const std::string& a, const std::string& b, const std::string& s,
             const std::string& c) {
  return fork2(Shape::sum(u(a), u(b))) >> (atom(xor_gate(a, b, s)) & atom(and_gate(a, b, c)));
}

Circuit fadd(const std::string& a, const std::string& b, const std::string& cin,
             const std::string& sum, const std::string& cout) {
  const std::string s1 = "s1";
  const std::string c1 = "c1";
  const std::string c2 = "c2";
  return (identity(u(cin)) & hadd(a, b, s1, c1)) >> assoc_left(u(cin), u(s1), u(c1)) >>
         (hadd(cin, s1, sum, c2) & identity(u(c1))) >> assoc_right(u(sum), u(c2), u(c1)) >>
         (identity(u(sum)) & atom(or_gate(c2, c1, cout)));
}

Circuit hl(const std::string& x, std::size_t n, std::size_t p) {
  return reshape(bus(x, n + p), Shape::sum(bus(x, n), bus(x, p)));
}

Circuit combine(const std::string& x, std::size_t n, std::size_t p) {
  return reshape(Shape::sum(bus(x, n), bus(x, p)), bus(x, n + p));
}

Circuit highlows(const std::string& a, const std::string& b, std::size_t n, std::size_t p) {
  const Shape out = Shape::sum(Shape::sum(bus(a, n), bus(b, n)), Shape::sum(bus(a, p), bus(b, p)));
  // after the two HLs: a_lo [0,n) a_hi [n,n+p) b_lo [n+p,2n+p) b_hi [2n+p,2n+2p)
  return then_rewire(hl(a, n, p) & hl(b, n, p), out,
                     cat({range(0, n), range(n + p, n), range(n, p), range(2 * n + p, p)}));
}

Circuit combines(const std::string& x, const std::string& y, std::size_t n, std::size_t p) {
  const Shape in = Shape::sum(Shape::sum(bus(x, n), bus(y, n)), Shape::sum(bus(x, p), bus(y, p)));
  const Shape grouped = Shape::sum(Shape::sum(bus(x, n), bus(x, p)), Shape::sum(bus(y, n), bus(y, p)));
  // x_lo [0,n) y_lo [n,2n) x_hi [2n,2n+p) y_hi [2n+p,2n+2p)
  return rewire(in, grouped, cat({range(0, n), range(2 * n, p), range(n, n), range(2 * n + p, p)})) >>
         (combine(x, n, p) & combine(y, n, p));
}

Circuit ripple(std::size_t n, const std::string& cin, const std::string& a, const std::string& b,
               const std::string& cout, const std::string& sum) {
  const Shape in = Shape::sum(u(cin), Shape::sum(bus(a, n), bus(b, n)));
  const Shape out = Shape::sum(bus(sum, n), u(cout));
  if (n == 0) return rewire(in, out, Positions{0});

  const std::size_t p = n - 1;
  const std::string carry = "c";
  const Shape rest = Shape::sum(bus(a, p), bus(b, p));
  Circuit c = identity(u(cin)) & highlows(a, b, 1, p);
  c = then_reshape(std::move(c), Shape::sum(Shape::sum(u(cin), Shape::sum(u(a), u(b))), rest));
  c = std::move(c) >> (fadd(a, b, cin, sum, carry) & identity(rest));
  c = then_reshape(std::move(c), Shape::sum(bus(sum, 1), Shape::sum(u(carry), rest)));
  c = std::move(c) >> (identity(bus(sum, 1)) & ripple(p, carry, a, b, cout, sum));
  c = then_reshape(std::move(c), Shape::sum(Shape::sum(bus(sum, 1), bus(sum, p)), u(cout)));
  return std::move(c) >> (combine(sum, 1, p) & identity(u(cout)));
}

Circuit muxn(std::size_t k, const std::string& sel, const std::string& x, const std::string& y,
             const std::string& out) {
  const Shape in = Shape::sum(u(sel), Shape::sum(bus(x, k), bus(y, k)));
  if (k == 0) return rewire(in, bus(out, 0), Positions{});
  const std::size_t p = k - 1;
  const Shape split = Shape::sum(Shape::sum(u(sel), Shape::sum(u(x), u(y))),
                                 Shape::sum(u(sel), Shape::sum(bus(x, p), bus(y, p))));
  // sel 0, x [1,1+k), y [1+k,1+2k)
  Circuit c = rewire(in, split, cat({{0, 1, 1 + k, 0}, range(2, p), range(2 + k, p)}));
  c = std::move(c) >> (atom(mux_gate(sel, x, y, out)) & muxn(p, sel, x, y, out));
  return then_reshape(std::move(c), bus(out, k));
}

Circuit pg() {
  const Shape gp = Shape::sum(u("g"), u("p"));
  const Shape spread = Shape::sum(Shape::sum(Shape::sum(u("p"), u("g")), u("g")),
                                  Shape::sum(Shape::sum(u("p"), u("p")), u("g")));
  // g = g_hi | (p_hi & g_lo); p = g_hi | (p_hi & p_lo)
  // inputs: g_lo 0, p_lo 1, g_hi 2, p_hi 3
  Circuit generate = (atom(and_gate("p", "g", "g_and")) & identity(u("g"))) >>
                     atom(or_gate("g_and", "g", "g"));
  Circuit propagate = (atom(and_gate("p", "p", "p_and")) & identity(u("g"))) >>
                      atom(or_gate("p_and", "g", "p"));
  return rewire(Shape::sum(gp, gp), spread, Positions{3, 0, 2, 3, 1, 2}) >>
         (std::move(generate) & std::move(propagate));
}

Circuit fix(std::size_t k) {
  if (k == 0) throw Error("fix needs k >= 1");
  const std::size_t h = std::size_t{1} << (k - 1);
  const Shape in = Shape::sum(Shape::sum(u("g"), u("p")), Shape::sum(bus("s", h), bus("t", h)));
  const Shape mux_g = Shape::sum(u("g"), Shape::sum(bus("t", h), bus("s", h)));
  const Shape mux_p = Shape::sum(u("p"), Shape::sum(bus("t", h), bus("s", h)));
  // g 0, p 1, s [2,2+h), t [2+h,2+2h); each mux selects t when its carry is set
  Circuit c = rewire(in, Shape::sum(mux_g, mux_p),
                     cat({{0}, range(2 + h, h), range(2, h), {1}, range(2 + h, h), range(2, h)}));
  return std::move(c) >> (muxn(h, "g", "t", "s", "s") & muxn(h, "p", "t", "s", "t"));
}

Shape dc_input_shape(std::size_t k) {
  const std::size_t w = std::size_t{1} << k;
  return Shape::sum(bus("a", w), bus("b", w));
}

Shape dc_output_shape(std::size_t k) {
  const std::size_t w = std::size_t{1} << k;
  return Shape::sum(Shape::sum(Shape::sum(u("g"), u("p")), bus("s", w)), bus("t", w));
}

Circuit dc(std::size_t k) {
  if (k == 0) {
    const Shape ab = Shape::sum(u("a"), u("b"));
    Circuit c = rewire(dc_input_shape(0), Shape::sum(Shape::sum(ab, ab), ab),
                       Positions{0, 1, 0, 1, 0, 1});
    // g = a & b, p = a | b, s = a ^ b, t = !(a ^ b)
    Circuit sums = atom(xor_gate("a", "b", "s")) >> fork2(u("s")) >>
                   (identity(u("s")) & atom(not_gate("s", "t")));
    c = std::move(c) >>
        ((atom(and_gate("a", "b", "g")) & atom(or_gate("a", "b", "p"))) & std::move(sums));
    return then_reshape(std::move(c), dc_output_shape(0));
  }
  const std::size_t h = std::size_t{1} << (k - 1);
  Circuit half = dc(k - 1);
  Circuit c = highlows("a", "b", h, h) >> (half & half);

  const Shape gp = Shape::sum(u("g"), u("p"));
  const Shape st = Shape::sum(bus("s", h), bus("t", h));
  const Shape routed = Shape::sum(Shape::sum(Shape::sum(gp, gp), Shape::sum(gp, st)), st);
  // low block: g 0, p 1, s [2,2+h), t [2+h,2+2h); high block starts at hb
  const std::size_t hb = 2 + 2 * h;
  c = then_rewire(std::move(c), routed,
                  cat({{0, 1, hb, hb + 1},                       // PG
                       {0, 1}, range(hb + 2, h), range(hb + 2 + h, h),  // FIX
                       range(2, h), range(2 + h, h)}));          // low halves pass through
  c = std::move(c) >> ((pg() & fix(k)) & identity(st));
  // g 0, p 1, s_hi [2,2+h), t_hi [2+h,2+2h), s_lo [2+2h,2+3h), t_lo [2+3h,2+4h)
  return then_rewire(std::move(c), dc_output_shape(k),
                     cat({{0, 1}, range(2 + 2 * h, h), range(2, h), range(2 + 3 * h, h),
                          range(2 + h, h)}));
}

Circuit composen(const Circuit& cell, std::size_t k) {
  if (!(cell.input_shape() == cell.output_shape())) {
    throw ShapeMismatch("composen needs a cell n -> n", cell.input_shape(), cell.output_shape());
  }
  if (k == 0) return identity(cell.input_shape());
  return cell >> composen(cell, k - 1);
}

Circuit map(const Circuit& cell, std::size_t k) {
  const Shape& n = cell.input_shape();
  const Shape& m = cell.output_shape();
  if (k == 0) return rewire(Shape::sumn(n, 0), Shape::sumn(m, 0), Positions{});
  const std::size_t p = k - 1;
  return reshape(Shape::sumn(n, k), Shape::sum(n, Shape::sumn(n, p))) >> (cell & map(cell, p)) >>
         reshape(Shape::sum(m, Shape::sumn(m, p)), Shape::sumn(m, k));
}

Circuit fifo(const std::string& x, std::size_t n, std::size_t k) {
  return composen(map(atom(dff_gate(x, x)), k), n);
}

Circuit reg(const std::string& a, const std::string& load, const std::string& out) {
  const std::string in_dff = "in_dff";
  const Shape body_in = Shape::sum(Shape::sum(u(load), u(a)), u(out));
  const Shape mux_in = Shape::sum(u(load), Shape::sum(u(a), u(out)));
  Circuit body = reshape(body_in, mux_in) >> atom(mux_gate(load, a, out, in_dff)) >>
                 atom(dff_gate(in_dff, out)) >> fork2(u(out));
  return loop(std::move(body));
}

// ---- registry -------------------------------------------------------------

namespace {

ParamSpec nat(std::string name, std::string def, std::size_t max, std::string help) {
  return ParamSpec{std::move(name), ParamSpec::Kind::kNatural, std::move(def), max, {},
                   std::move(help)};
}

ParamSpec tag(std::string name, std::string def) {
  return ParamSpec{std::move(name), ParamSpec::Kind::kText, def, 0, {}, "wire tag"};
}

ParamSpec choice(std::string name, std::string def, std::vector<std::string> choices,
                 std::string help) {
  return ParamSpec{std::move(name), ParamSpec::Kind::kText, std::move(def), 0,
                   std::move(choices), std::move(help)};
}

const std::string& text(const ParamValues& v, const std::string& name) { return v.at(name); }

Circuit named_cell(const std::string& name) {
  if (name == "not") return atom(not_gate("x", "x"));
  if (name == "dff") return atom(dff_gate("x", "x"));
  if (name == "hadd") return hadd();
  throw InvalidParams("unknown cell '" + name + "'");
}

Circuit single_gate(const std::string& kind_name) {
  const auto kind = parse_gate_kind(kind_name);
  if (!kind) throw InvalidParams("unknown gate kind '" + kind_name + "'");
  switch (input_arity(*kind)) {
    case 1: return atom(GateInstance(*kind, {"a", "out"}));
    case 2: return atom(GateInstance(*kind, {"a", "b", "out"}));
    default: return atom(GateInstance(*kind, {"sel", "a", "b", "out"}));
  }
}

std::vector<GeneratorSpec> make_registry() {
  std::vector<std::string> gate_names;
  for (GateKind k : kAllGateKinds) gate_names.emplace_back(gate_name(k));
  std::vector<GeneratorSpec> r;
  r.push_back({"gate", "a single gate atom", {choice("kind", "NOR", gate_names, "gate kind")},
               [](const ParamValues& v) { return single_gate(text(v, "kind")); }});
  r.push_back({"hadd", "half adder", {tag("a", "a"), tag("b", "b"), tag("s", "s"), tag("c", "c")},
               [](const ParamValues& v) {
                 return hadd(text(v, "a"), text(v, "b"), text(v, "s"), text(v, "c"));
               }});
  r.push_back({"fadd", "full adder from two half adders",
               {tag("a", "a"), tag("b", "b"), tag("cin", "cin"), tag("sum", "sum"),
                tag("cout", "cout")},
               [](const ParamValues& v) {
                 return fadd(text(v, "a"), text(v, "b"), text(v, "cin"), text(v, "sum"),
                             text(v, "cout"));
               }});
  r.push_back({"hl", "split a bus into low and high parts",
               {tag("x", "x"), nat("n", "1", 64, "low width"), nat("p", "1", 64, "high width")},
               [](const ParamValues& v) {
                 return hl(text(v, "x"), natural_param(v, "n"), natural_param(v, "p"));
               }});
  r.push_back({"combine", "join low and high parts into one bus",
               {tag("x", "x"), nat("n", "1", 64, "low width"), nat("p", "1", 64, "high width")},
               [](const ParamValues& v) {
                 return combine(text(v, "x"), natural_param(v, "n"), natural_param(v, "p"));
               }});
  r.push_back({"highlows", "split two buses at once",
               {tag("a", "a"), tag("b", "b"), nat("n", "1", 64, "low width"),
                nat("p", "1", 64, "high width")},
               [](const ParamValues& v) {
                 return highlows(text(v, "a"), text(v, "b"), natural_param(v, "n"),
                                 natural_param(v, "p"));
               }});
  r.push_back({"combines", "join two buses at once",
               {tag("x", "x"), tag("y", "y"), nat("n", "1", 64, "low width"),
                nat("p", "1", 64, "high width")},
               [](const ParamValues& v) {
                 return combines(text(v, "x"), text(v, "y"), natural_param(v, "n"),
                                 natural_param(v, "p"));
               }});
  r.push_back({"ripple", "ripple-carry adder",
               {nat("n", "4", 64, "operand width"), tag("cin", "cin"), tag("a", "a"),
                tag("b", "b"), tag("cout", "cout"), tag("sum", "sum")},
               [](const ParamValues& v) {
                 return ripple(natural_param(v, "n"), text(v, "cin"), text(v, "a"), text(v, "b"),
                               text(v, "cout"), text(v, "sum"));
               }});
  r.push_back({"muxn", "k-bit two-way multiplexer",
               {nat("k", "4", 64, "bus width"), tag("sel", "sel"), tag("x", "x"), tag("y", "y"),
                tag("out", "out")},
               [](const ParamValues& v) {
                 return muxn(natural_param(v, "k"), text(v, "sel"), text(v, "x"), text(v, "y"),
                             text(v, "out"));
               }});
  r.push_back({"pg", "propagate/generate combiner", {},
               [](const ParamValues&) { return pg(); }});
  r.push_back({"fix", "high-half correction for dc(k)", {nat("k", "1", 6, "dc level, >= 1")},
               [](const ParamValues& v) {
                 const std::size_t k = natural_param(v, "k");
                 if (k == 0) throw InvalidParams("fix needs k >= 1");
                 return fix(k);
               }});
  r.push_back({"dc", "divide-and-conquer adder over 2^k-bit words",
               {nat("k", "2", 6, "log2 of operand width")},
               [](const ParamValues& v) { return dc(natural_param(v, "k")); }});
  r.push_back({"composen", "k cells in series",
               {choice("cell", "not", {"not", "dff"}, "square cell"), nat("k", "2", 1024, "copies")},
               [](const ParamValues& v) {
                 return composen(named_cell(text(v, "cell")), natural_param(v, "k"));
               }});
  r.push_back({"map", "k cells in parallel",
               {choice("cell", "not", {"not", "dff", "hadd"}, "cell"),
                nat("k", "2", 1024, "copies")},
               [](const ParamValues& v) {
                 return map(named_cell(text(v, "cell")), natural_param(v, "k"));
               }});
  r.push_back({"fifo", "n layers of k DFFs",
               {tag("x", "x"), nat("n", "2", 1024, "depth"), nat("k", "1", 1024, "width")},
               [](const ParamValues& v) {
                 return fifo(text(v, "x"), natural_param(v, "n"), natural_param(v, "k"));
               }});
  r.push_back({"register", "one-bit register with load enable",
               {tag("a", "a"), tag("load", "load"), tag("out", "out")},
               [](const ParamValues& v) {
                 return reg(text(v, "a"), text(v, "load"), text(v, "out"));
               }});
  return r;
}

}  // namespace

const std::vector<GeneratorSpec>& registry() {
  static const std::vector<GeneratorSpec> r = make_registry();
  return r;
}

const GeneratorSpec* find_generator(const std::string& name) {
  for (const auto& g : registry()) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::size_t natural_param(const ParamValues& values, const std::string& name) {
  const std::string& s = values.at(name);
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw InvalidParams("parameter " + name + " must be a natural number, got '" + s + "'");
  }
  return v;
}

ParamValues resolve_params(const GeneratorSpec& spec, const ParamValues& given) {
  return resolve_params(spec.name, spec.params, given);
}

ParamValues resolve_params(const std::string& owner, const std::vector<ParamSpec>& params,
                           const ParamValues& given) {
  ParamValues out;
  for (const auto& [name, value] : given) {
    bool known = false;
    for (const auto& p : params) known = known || p.name == name;
    if (!known) throw InvalidParams(owner + " has no parameter '" + name + "'");
  }
  for (const ParamSpec& p : params) {
    auto it = given.find(p.name);
    std::string value = it == given.end() ? p.default_value : it->second;
    if (p.kind == ParamSpec::Kind::kNatural) {
      out[p.name] = value;
      if (natural_param(out, p.name) > p.max) {
        throw InvalidParams("parameter " + p.name + " must be at most " + std::to_string(p.max));
      }
    } else {
      if (value.empty()) throw InvalidParams("parameter " + p.name + " must be non-empty");
      if (!p.choices.empty() &&
          std::find(p.choices.begin(), p.choices.end(), value) == p.choices.end()) {
        throw InvalidParams("parameter " + p.name + " has no choice '" + value + "'");
      }
      out[p.name] = value;
    }
  }
  return out;
}

Circuit build(const std::string& name, const ParamValues& given) {
  const GeneratorSpec* spec = find_generator(name);
  if (!spec) throw InvalidParams("unknown generator '" + name + "'");
  return spec->build(resolve_params(*spec, given));
}

}  // namespace wirekit::gen
