// wirekit command-line front end. Every command is a thin wrapper over the
// library; exit codes: 0 ok, 1 claim fails, 2 usage, 3 loop/delay guard.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wirekit/analyses.hpp"
#include "wirekit/claims.hpp"
#include "wirekit/generators.hpp"
#include "wirekit/semantics.hpp"
#include "wirekit/stimulus.hpp"

namespace {

using namespace wirekit;

constexpr int kOk = 0;
constexpr int kClaimFails = 1;
constexpr int kUsage = 2;
constexpr int kSemantic = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

gen::ParamValues parse_params(const std::vector<std::string>& items) {
  gen::ParamValues out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects name=value, got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + *path);
}

// A registered generator name, or a netlist file.
struct Source {
  std::string name;
  std::vector<std::string> params;

  void add_to(CLI::App* cmd) {
    cmd->add_option("source", name, "generator name or netlist file")->required();
    cmd->add_option("-p,--param", params, "generator parameter name=value (repeatable)");
  }

  Netlist load() const {
    if (gen::find_generator(name)) return elaborate(gen::build(name, parse_params(params)));
    if (!std::filesystem::exists(name)) {
      throw UsageError("'" + name + "' is neither a generator nor a file; try `wirekit list`");
    }
    if (!params.empty()) throw UsageError("--param applies to generators, not files");
    return from_netlist_file(read_file(name));
  }
};

std::optional<CheckMode> parse_mode(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "exhaustive") return CheckMode::exhaustive();
  constexpr std::string_view kSample = "sample:";
  if (text.rfind(kSample, 0) == 0) {
    const std::string n = text.substr(kSample.size());
    if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos) {
      return CheckMode::sampled(std::stoull(n), 0);
    }
  }
  throw UsageError("--mode expects exhaustive or sample:N, got '" + text + "'");
}

std::string describe_params(const std::vector<gen::ParamSpec>& params) {
  std::ostringstream os;
  for (const auto& p : params) {
    os << " " << p.name << "=" << p.default_value;
    if (p.kind == gen::ParamSpec::Kind::kNatural) os << "(<=" << p.max << ")";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wirekit: build, simulate, check and export gate-level circuits"};
  app.require_subcommand(1);
  int status = kOk;

  // list
  auto* list = app.add_subcommand("list", "list generators and claims with their parameters");
  list->callback([] {
    std::cout << "generators:\n";
    for (const auto& g : gen::registry()) {
      std::cout << "  " << g.name << describe_params(g.params) << "\n      " << g.help << "\n";
    }
    std::cout << "claims:\n";
    for (const auto& c : claims()) {
      std::cout << "  " << c.name << describe_params(c.params) << "\n      " << c.help << "\n";
    }
  });

  // gen
  Source gen_src;
  std::optional<std::string> gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "elaborate a generator into a netlist file");
  gen_src.add_to(gen_cmd);
  gen_cmd->add_option("-o,--out", gen_out, "netlist file to write");
  gen_cmd->callback([&] {
    const Netlist nl = gen_src.load();
    if (gen_out) write_output(gen_out, to_netlist_file(nl));
    std::cout << interface_summary(nl);
  });

  // sim
  Source sim_src;
  std::string sim_inputs;
  std::optional<std::size_t> sim_ticks;
  auto* sim = app.add_subcommand(
      "sim",
      "simulate a circuit\n"
      "  SPEC is a comma-separated list of tag=value, one per input tag:\n"
      "    0 | 1            a single wire\n"
      "    decimal word     same-tagged wires, least significant first\n"
      "    trace:0110       one bit per tick (single wire)\n"
      "    trace:9/3/0      one word per tick\n"
      "  Constants hold for every tick; short traces are padded with 0.\n"
      "  Combinational circuits with constant inputs print one line.");
  sim_src.add_to(sim);
  sim->add_option("-i,--inputs", sim_inputs, "input SPEC")->required();
  sim->add_option("-t,--ticks", sim_ticks, "number of clock ticks");
  sim->callback([&] {
    const Netlist nl = sim_src.load();
    const Simulator simulator(nl);
    const Stimulus s = parse_stimulus(sim_inputs, nl.inputs, sim_ticks);
    if (!simulator.has_delay() && !s.has_traces && !sim_ticks) {
      std::vector<bool> bits;
      for (const BitTrace& t : s.traces) bits.push_back(t.front());
      std::cout << format_sample(nl.outputs, simulator.eval(bits)) << "\n";
      return;
    }
    const std::vector<BitTrace> outs = simulator.run(s.traces, s.ticks);
    for (std::size_t t = 0; t < s.ticks; ++t) {
      std::vector<bool> bits;
      for (const BitTrace& o : outs) bits.push_back(o[t]);
      std::cout << "t=" << t << " " << format_sample(nl.outputs, bits) << "\n";
    }
  });

  // check
  std::string claim_name;
  std::vector<std::string> claim_params;
  std::string mode_text;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::optional<std::string> check_out;
  auto* check = app.add_subcommand("check", "run a named correctness claim");
  check->add_option("claim", claim_name, "claim name; see `wirekit list`")->required();
  check->add_option("-p,--param", claim_params, "claim parameter name=value (repeatable)");
  check->add_option("-m,--mode", mode_text, "exhaustive | sample:N");
  check->add_option("-s,--seed", seed, "random seed for sampled checks");
  check->add_option("-f,--format", format, "text | file (structured JSON report)")
      ->check(CLI::IsMember({"text", "file"}));
  check->add_option("-o,--out", check_out, "write the report here instead of stdout");
  check->callback([&] {
    if (!find_claim(claim_name)) {
      throw UsageError("unknown claim '" + claim_name + "'; try `wirekit list`");
    }
    const ClaimOptions options{parse_mode(mode_text), seed};
    const CheckReport report = run_claim(claim_name, parse_params(claim_params), options);
    write_output(check_out, format == "file" ? report.to_json() : report.to_text());
    status = report.verdict() ? kOk : kClaimFails;
  });

  // stats
  Source stats_src;
  auto* stats = app.add_subcommand("stats", "gate counts and critical path");
  stats_src.add_to(stats);
  stats->callback([&] {
    const Netlist nl = stats_src.load();
    const std::size_t depth = critical_path(nl);
    std::string counts = to_string(gate_count(nl));
    if (!counts.empty()) counts += " ";
    std::cout << counts << "depth:" << depth << "\n";
  });

  // export
  Source export_src;
  std::string export_format;
  std::optional<std::string> export_out;
  auto* exp = app.add_subcommand("export", "write a circuit as Graphviz DOT or netlist file");
  exp->add_option("format", export_format, "dot | nl")
      ->required()
      ->check(CLI::IsMember({"dot", "nl"}));
  export_src.add_to(exp);
  exp->add_option("-o,--out", export_out, "output file (default stdout)");
  exp->callback([&] {
    const Netlist nl = export_src.load();
    write_output(export_out, export_format == "dot" ? to_dot(nl) : to_netlist_file(nl));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const CombinationalLoop& e) {
    std::cerr << "error: combinational loop: " << e.what() << "\n";
    return kSemantic;
  } catch (const HasDelay& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
