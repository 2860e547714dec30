#include "wirekit/analyses.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "wirekit/semantics.hpp"

namespace wirekit {

GateCount gate_count(const Circuit& c) {
  GateCount out;
  auto add = [&out](const GateCount& more) {
    for (const auto& [k, n] : more) out[k] += n;
  };
  switch (c.kind()) {
    case Circuit::Kind::kAtom: out[c.gate().kind()] = 1; break;
    case Circuit::Kind::kPlug: break;
    case Circuit::Kind::kSer:
    case Circuit::Kind::kPar:
      add(gate_count(c.first()));
      add(gate_count(c.second()));
      break;
    case Circuit::Kind::kLoop: add(gate_count(c.body())); break;
  }
  return out;
}

GateCount gate_count(const Netlist& nl) {
  GateCount out;
  for (const NetlistGate& g : nl.gates) ++out[g.kind];
  return out;
}

std::size_t total_gates(const GateCount& count) {
  std::size_t n = 0;
  for (const auto& [k, v] : count) n += v;
  return n;
}

std::string to_string(const GateCount& count) {
  static constexpr GateKind kDisplayOrder[] = {GateKind::kXor, GateKind::kAnd, GateKind::kOr,
                                               GateKind::kNot, GateKind::kNor, GateKind::kMux,
                                               GateKind::kDff};
  std::string out;
  for (GateKind k : kDisplayOrder) {
    auto it = count.find(k);
    if (it == count.end() || it->second == 0) continue;
    if (!out.empty()) out.push_back(' ');
    out += std::string(gate_name(k)) + ":" + std::to_string(it->second);
  }
  return out;
}

std::size_t critical_path(const Netlist& nl, const DelayTable& delays) {
  const std::vector<std::size_t> order = combinational_order(nl);
  std::vector<std::size_t> arrival(nl.gates.size(), 0);
  auto at = [&](const Driver& d) -> std::size_t {
    if (d.kind == Driver::Kind::kInput) return 0;
    return is_sequential(nl.gates[d.index].kind) ? 0 : arrival[d.index];
  };
  for (std::size_t g : order) {
    std::size_t latest = 0;
    for (const Driver& d : nl.gates[g].inputs) latest = std::max(latest, at(d));
    arrival[g] = latest + delays.of(nl.gates[g].kind);
  }
  std::size_t longest = 0;
  for (const Driver& d : nl.output_drivers) longest = std::max(longest, at(d));
  for (const NetlistGate& g : nl.gates) {
    if (is_sequential(g.kind)) longest = std::max(longest, at(g.inputs[0]));
  }
  return longest;
}

std::size_t critical_path(const Circuit& c, const DelayTable& delays) {
  return critical_path(elaborate(c), delays);
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

std::string dot_node(const Driver& d) {
  return d.kind == Driver::Kind::kInput ? "in" + std::to_string(d.index)
                                        : "g" + std::to_string(d.index);
}

}  // namespace

std::string to_dot(const Netlist& nl, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  os << "  rankdir=LR;\n";
  for (const Port& p : nl.inputs) {
    os << "  in" << p.position << " [shape=circle, label=\"" << dot_escape(p.tag) << "\\n"
       << dot_escape(p.path.to_string()) << "\"];\n";
  }
  for (const NetlistGate& g : nl.gates) {
    os << "  g" << g.id << " [shape=box, label=\"" << gate_name(g.kind) << "\\n"
       << dot_escape(g.name) << "\"];\n";
  }
  for (const Port& p : nl.outputs) {
    os << "  out" << p.position << " [shape=doublecircle, label=\"" << dot_escape(p.tag)
       << "\\n" << dot_escape(p.path.to_string()) << "\"];\n";
  }
  for (const NetlistGate& g : nl.gates) {
    for (std::size_t port = 0; port < g.inputs.size(); ++port) {
      os << "  " << dot_node(g.inputs[port]) << " -> g" << g.id << " [headlabel=\"" << port
         << "\"];\n";
    }
  }
  for (std::size_t o = 0; o < nl.output_drivers.size(); ++o) {
    os << "  " << dot_node(nl.output_drivers[o]) << " -> out" << o << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---- netlist file -----------------------------------------------------------

namespace {

constexpr std::string_view kMagic = "wirekit-netlist 1";

// Percent-encodes every byte outside the printable, space-free ASCII range.
std::string encode_text(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char ch : s) {
    if (ch <= 0x20 || ch >= 0x7f || ch == '%') {
      out.push_back('%');
      out.push_back(kHex[ch >> 4]);
      out.push_back(kHex[ch & 0xF]);
    } else {
      out.push_back(static_cast<char>(ch));
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      lines_.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }

  std::size_t line_no() const { return next_; }

  std::vector<std::string_view> fields() {
    if (next_ >= lines_.size()) throw ParseError(next_ + 1, "unexpected end of file");
    std::string_view line = lines_[next_++];
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t sp = line.find(' ', pos);
      if (sp == std::string_view::npos) sp = line.size();
      if (sp == pos) fail("empty field (double or trailing space)");
      out.push_back(line.substr(pos, sp - pos));
      pos = sp + 1;
    }
    return out;
  }

  std::string_view raw_line() {
    if (next_ >= lines_.size()) throw ParseError(next_ + 1, "unexpected end of file");
    return lines_[next_++];
  }

  bool at_end() const { return next_ >= lines_.size(); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(next_, what); }

  std::size_t number(std::string_view s, const char* field) const {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
      fail(std::string(field) + ": expected a natural number, got '" + std::string(s) + "'");
    }
    return v;
  }

  std::string decode_text(std::string_view s, const char* field) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '%') {
        out.push_back(s[i]);
        continue;
      }
      if (i + 2 >= s.size()) {
        fail(std::string(field) + ": truncated escape");
      }
      unsigned v = 0;
      auto [p, ec] = std::from_chars(s.data() + i + 1, s.data() + i + 3, v, 16);
      if (ec != std::errc() || p != s.data() + i + 3) {
        fail(std::string(field) + ": bad escape in '" + std::string(s) + "'");
      }
      out.push_back(static_cast<char>(v));
      i += 2;
    }
    if (out.empty()) fail(std::string(field) + ": empty text");
    if (encode_text(out) != s) fail(std::string(field) + ": non-canonical escaping");
    return out;
  }

  Driver driver(std::string_view s) const {
    if (s.starts_with("in:")) return Driver::input(number(s.substr(3), "driver"));
    if (s.starts_with("g:")) return Driver::gate(number(s.substr(2), "driver"));
    fail("bad driver '" + std::string(s) + "'");
  }

  Sink sink(std::string_view s) const {
    if (s.starts_with("out:")) return Sink{Sink::Kind::kOutput, number(s.substr(4), "sink"), 0};
    if (s.starts_with("g:")) {
      std::string_view rest = s.substr(2);
      std::size_t dot = rest.find('.');
      if (dot == std::string_view::npos) fail("bad sink '" + std::string(s) + "'");
      return Sink{Sink::Kind::kGate, number(rest.substr(0, dot), "sink"),
                  number(rest.substr(dot + 1), "sink port")};
    }
    fail("bad sink '" + std::string(s) + "'");
  }

  std::size_t header(std::string_view keyword) {
    auto f = fields();
    if (f.size() != 2 || f[0] != keyword) {
      fail("expected '" + std::string(keyword) + " <count>'");
    }
    return number(f[1], keyword.data());
  }

  Index path(std::string_view s) const {
    try {
      return Index::parse(s);
    } catch (const InvalidIndex& e) {
      fail(e.what());
    }
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

}  // namespace

std::string to_netlist_file(const Netlist& nl) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "inputs " << nl.inputs.size() << "\n";
  for (const Port& p : nl.inputs) {
    os << p.position << " " << p.path.to_string() << " " << encode_text(p.tag) << "\n";
  }
  os << "outputs " << nl.outputs.size() << "\n";
  for (std::size_t o = 0; o < nl.outputs.size(); ++o) {
    const Port& p = nl.outputs[o];
    os << p.position << " " << p.path.to_string() << " " << encode_text(p.tag) << " "
       << nl.output_drivers.at(o).to_string() << "\n";
  }
  os << "gates " << nl.gates.size() << "\n";
  for (const NetlistGate& g : nl.gates) {
    os << g.id << " " << gate_name(g.kind) << " " << encode_text(g.name);
    for (const Driver& d : g.inputs) os << " " << d.to_string();
    os << "\n";
  }
  const auto nets = nl.nets();
  os << "nets " << nets.size() << "\n";
  for (const auto& [driver, sinks] : nets) {
    os << driver.to_string() << " ->";
    for (const Sink& s : sinks) os << " " << s.to_string();
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

Netlist from_netlist_file(std::string_view text) {
  Reader r(text);
  Netlist nl;
  if (r.raw_line() != kMagic) r.fail("expected header '" + std::string(kMagic) + "'");

  const std::size_t n_in = r.header("inputs");
  for (std::size_t i = 0; i < n_in; ++i) {
    auto f = r.fields();
    if (f.size() != 3) r.fail("input line needs: position path tag");
    nl.inputs.push_back(Port{r.number(f[0], "position"), r.path(f[1]), r.decode_text(f[2], "tag")});
  }
  const std::size_t n_out = r.header("outputs");
  for (std::size_t i = 0; i < n_out; ++i) {
    auto f = r.fields();
    if (f.size() != 4) r.fail("output line needs: position path tag driver");
    nl.outputs.push_back(Port{r.number(f[0], "position"), r.path(f[1]), r.decode_text(f[2], "tag")});
    nl.output_drivers.push_back(r.driver(f[3]));
  }
  const std::size_t n_gates = r.header("gates");
  for (std::size_t i = 0; i < n_gates; ++i) {
    auto f = r.fields();
    if (f.size() < 3) r.fail("gate line needs: id kind name drivers...");
    const auto kind = parse_gate_kind(f[1]);
    if (!kind) r.fail("unknown gate kind '" + std::string(f[1]) + "'");
    if (f.size() != 3 + input_arity(*kind)) {
      r.fail(std::string(f[1]) + " takes " + std::to_string(input_arity(*kind)) + " drivers");
    }
    NetlistGate g{r.number(f[0], "gate id"), *kind, r.decode_text(f[2], "gate name"), {}};
    for (std::size_t k = 3; k < f.size(); ++k) g.inputs.push_back(r.driver(f[k]));
    nl.gates.push_back(std::move(g));
  }
  const std::size_t n_nets = r.header("nets");
  std::map<Driver, std::vector<Sink>> nets;
  for (std::size_t i = 0; i < n_nets; ++i) {
    auto f = r.fields();
    if (f.size() < 3 || f[1] != "->") r.fail("net line needs: driver -> sinks...");
    const Driver d = r.driver(f[0]);
    if (nets.count(d)) r.fail("net " + d.to_string() + " listed twice");
    auto& sinks = nets[d];
    for (std::size_t k = 2; k < f.size(); ++k) sinks.push_back(r.sink(f[k]));
  }
  if (r.raw_line() != "end") r.fail("expected 'end'");
  while (!r.at_end()) {
    if (!r.raw_line().empty()) r.fail("content after 'end'");
  }
  try {
    nl.validate();
  } catch (const Error& e) {
    throw ParseError(r.line_no(), e.what());
  }
  if (nets != nl.nets()) {
    throw ParseError(r.line_no(), "nets section disagrees with gate and output drivers");
  }
  return nl;
}

}  // namespace wirekit
