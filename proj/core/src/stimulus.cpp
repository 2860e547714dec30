#include "wirekit/stimulus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace wirekit {

namespace {

std::uint64_t parse_word(std::string_view text, std::size_t width, const std::string& tag) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || p != text.data() + text.size()) {
    throw StimulusError("value for '" + tag + "' is not a natural number: '" +
                        std::string(text) + "'");
  }
  if (width < 64 && v >> width) {
    throw StimulusError("value " + std::string(text) + " does not fit the " +
                        std::to_string(width) + " wire(s) of '" + tag + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Samples of one group: per tick, one word. A constant has no tick list.
struct GroupValue {
  std::vector<std::uint64_t> samples;
  bool is_trace = false;
};

GroupValue parse_value(std::string_view text, const PortGroup& g) {
  const std::size_t width = g.positions.size();
  if (width > 64) {
    throw StimulusError("input group '" + g.tag + "' has more than 64 wires");
  }
  constexpr std::string_view kTrace = "trace:";
  if (text.substr(0, kTrace.size()) != kTrace) return {{parse_word(text, width, g.tag)}, false};

  text.remove_prefix(kTrace.size());
  GroupValue out{{}, true};
  if (width == 1 && text.find('/') == std::string_view::npos) {
    for (char ch : text) {
      if (ch != '0' && ch != '1') {
        throw StimulusError("trace for '" + g.tag + "' must be a string of 0 and 1");
      }
      out.samples.push_back(ch == '1');
    }
    return out;
  }
  if (text.empty()) return out;
  for (std::string_view w : split(text, '/')) out.samples.push_back(parse_word(w, width, g.tag));
  return out;
}

}  // namespace

std::vector<PortGroup> group_ports(const std::vector<Port>& ports) {
  std::vector<PortGroup> groups;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    auto [it, fresh] = seen.emplace(ports[i].tag, groups.size());
    if (fresh) groups.push_back({ports[i].tag, {}});
    groups[it->second].positions.push_back(i);
  }
  return groups;
}

Stimulus parse_stimulus(std::string_view spec, const std::vector<Port>& inputs,
                        std::optional<std::size_t> ticks) {
  const std::vector<PortGroup> groups = group_ports(inputs);
  std::map<std::string, GroupValue> given;
  spec = trim(spec);
  if (!spec.empty()) {
    for (std::string_view item : split(spec, ',')) {
      item = trim(item);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw StimulusError("expected tag=value, got '" + std::string(item) + "'");
      }
      const std::string tag(trim(item.substr(0, eq)));
      auto g = std::find_if(groups.begin(), groups.end(),
                            [&](const PortGroup& pg) { return pg.tag == tag; });
      if (g == groups.end()) throw StimulusError("no input named '" + tag + "'");
      if (given.count(tag)) throw StimulusError("input '" + tag + "' given twice");
      given[tag] = parse_value(trim(item.substr(eq + 1)), *g);
    }
  }

  Stimulus out;
  std::size_t longest = 0;
  for (const PortGroup& g : groups) {
    auto it = given.find(g.tag);
    if (it == given.end()) throw StimulusError("missing value for input '" + g.tag + "'");
    if (it->second.is_trace) {
      out.has_traces = true;
      longest = std::max(longest, it->second.samples.size());
    }
  }
  out.ticks = ticks.value_or(longest > 0 ? longest : 1);

  out.traces.assign(inputs.size(), BitTrace(out.ticks, false));
  for (const PortGroup& g : groups) {
    const GroupValue& v = given.at(g.tag);
    if (v.is_trace && v.samples.size() > out.ticks) {
      throw StimulusError("trace for '" + g.tag + "' is longer than " +
                          std::to_string(out.ticks) + " ticks");
    }
    for (std::size_t t = 0; t < out.ticks; ++t) {
      std::uint64_t word = 0;
      if (!v.is_trace) word = v.samples.front();
      else if (t < v.samples.size()) word = v.samples[t];
      for (std::size_t b = 0; b < g.positions.size(); ++b) {
        out.traces[g.positions[b]][t] = (word >> b) & 1U;
      }
    }
  }
  return out;
}

std::string format_sample(const std::vector<Port>& outputs, const std::vector<bool>& bits) {
  std::ostringstream os;
  bool first = true;
  for (const PortGroup& g : group_ports(outputs)) {
    if (!first) os << ' ';
    first = false;
    os << g.tag << '=';
    if (g.positions.size() > 64) {
      for (auto it = g.positions.rbegin(); it != g.positions.rend(); ++it) os << bits.at(*it);
      continue;
    }
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < g.positions.size(); ++b) {
      v |= std::uint64_t{bits.at(g.positions[b])} << b;
    }
    os << v;
  }
  return os.str();
}

std::string interface_summary(const Netlist& nl) {
  auto side = [](const char* name, const std::vector<Port>& ports) {
    std::ostringstream os;
    os << name << ' ' << ports.size() << ':';
    for (const PortGroup& g : group_ports(ports)) {
      os << ' ' << g.tag;
      if (g.positions.size() > 1) os << '[' << g.positions.size() << ']';
    }
    return os.str();
  };
  std::ostringstream os;
  os << side("inputs", nl.inputs) << '\n' << side("outputs", nl.outputs) << '\n';
  os << "gates " << nl.gates.size() << " (dff " << nl.dff_count() << ")\n";
  return os.str();
}

}  // namespace wirekit
