#include "wirekit/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wirekit/semantics.hpp"

namespace wirekit {

namespace {

bool failure_less(const CheckReport::Failure& a, const CheckReport::Failure& b) {
  if (auto c = a.input <=> b.input; c != 0) return c < 0;
  return a.actual < b.actual;
}

std::vector<bool> random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (rng() & 1U) != 0;
  return bits;
}

std::vector<bool> counter_bits(std::uint64_t x, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (x >> i) & 1U;
  return bits;
}

std::uint64_t domain_size(std::size_t leaves) {
  if (leaves >= 63) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << leaves;
}

void require_shape(const Shape& expected, const Shape& actual, const char* what) {
  if (!(expected == actual)) throw ShapeMismatch(what, expected, actual);
}

std::vector<BitTrace> random_traces(std::mt19937_64& rng, std::size_t wires, std::size_t ticks) {
  std::vector<BitTrace> out(wires, BitTrace(ticks));
  for (std::size_t t = 0; t < ticks; ++t) {
    for (std::size_t w = 0; w < wires; ++w) out[w][t] = (rng() & 1U) != 0;
  }
  return out;
}

std::string mode_name(const CheckMode& m) {
  if (m.kind == CheckMode::Kind::kExhaustive) return "exhaustive";
  return "sampled";
}

}  // namespace

Value bits_value(const std::vector<bool>& bits) {
  std::vector<Value> items;
  items.reserve(bits.size());
  for (bool b : bits) items.push_back(Value::bit(b));
  return Value::vec(std::move(items));
}

void record_failure(CheckReport& report, CheckReport::Failure failure) {
  ++report.failure_count;
  auto& f = report.failures;
  if (f.size() == kMaxReportedFailures && !failure_less(failure, f.back())) return;
  f.insert(std::upper_bound(f.begin(), f.end(), failure, failure_less), std::move(failure));
  if (f.size() > kMaxReportedFailures) f.pop_back();
}

CheckReport check_implements(const std::string& claim, const Circuit& c, const Codec& in,
                             const Codec& out, const ValueFn& f, CheckMode mode) {
  require_shape(c.input_shape(), in.shape(), "check_implements input codec");
  require_shape(c.output_shape(), out.shape(), "check_implements output codec");
  if (contains_dff(c)) throw HasDelay("check_implements needs a delay-free circuit");
  const Simulator sim(elaborate(c));
  const std::size_t leaves = in.shape().leaf_count();

  CheckReport report{claim, mode, 0, 0, 0, {}};
  auto check_one = [&](std::vector<bool> bits) {
    const Value v = in.decode(BoolBundle(in.shape(), bits));
    const Value expected = f(v);
    const Value actual = out.decode(BoolBundle(out.shape(), sim.eval(bits)));
    ++report.total_cases;
    if (!(actual == expected)) record_failure(report, {v, expected, actual});
  };

  if (mode.kind == CheckMode::Kind::kExhaustive) {
    const std::uint64_t total = domain_size(leaves);
    if (total > kMaxExhaustiveCases) {
      throw DomainTooLarge(claim + ": " + std::to_string(leaves) +
                           " input leaves is too many for an exhaustive check");
    }
    for (std::uint64_t x = 0; x < total; ++x) check_one(counter_bits(x, leaves));
  } else {
    std::mt19937_64 rng(mode.seed);
    for (std::size_t i = 0; i < mode.count; ++i) check_one(random_bits(rng, leaves));
  }
  return report;
}

CheckReport check_realise_trace(const std::string& claim, const Circuit& c,
                                const StreamCodec& in, const StreamCodec& out,
                                const TraceRelation& relation, const TraceSampling& sampling) {
  require_shape(c.input_shape(), in.shape(), "check_realise_trace input codec");
  require_shape(c.output_shape(), out.shape(), "check_realise_trace output codec");
  const Simulator sim(elaborate(c));
  CheckReport report{claim, CheckMode::sampled(sampling.count, sampling.seed), sampling.ticks,
                     0, 0, {}};
  std::mt19937_64 rng(sampling.seed);
  for (std::size_t i = 0; i < sampling.count; ++i) {
    auto traces = random_traces(rng, in.shape().leaf_count(), sampling.ticks);
    const Value ins = in.decode(TraceBundle(in.shape(), traces));
    const Value outs =
        out.decode(TraceBundle(out.shape(), sim.run(traces, sampling.ticks)));
    ++report.total_cases;
    if (!relation(ins, outs)) record_failure(report, {ins, std::nullopt, outs});
  }
  return report;
}

CheckReport check_lift(const std::string& claim, const Circuit& c, const ValueFn& f,
                       const Codec& in, const Codec& out, const TraceSampling& sampling) {
  require_shape(c.input_shape(), in.shape(), "check_lift input codec");
  require_shape(c.output_shape(), out.shape(), "check_lift output codec");
  const LiftClaim lifted = lift_combinational(c);
  const StreamCodec in_stream(in, sampling.ticks);
  const StreamCodec out_stream(out, sampling.ticks);
  CheckReport report{claim, CheckMode::sampled(sampling.count, sampling.seed), sampling.ticks,
                     0, 0, {}};
  std::mt19937_64 rng(sampling.seed);
  for (std::size_t i = 0; i < sampling.count; ++i) {
    auto traces = random_traces(rng, in.shape().leaf_count(), sampling.ticks);
    const Value ins = in_stream.decode(TraceBundle(in.shape(), traces));
    std::vector<Value> mapped;
    mapped.reserve(sampling.ticks);
    for (const Value& sample : ins.elements()) mapped.push_back(f(sample));
    const Value expected = Value::trace(std::move(mapped));
    const Value actual = out_stream.decode(
        TraceBundle(out.shape(), lifted.simulator().run(traces, sampling.ticks)));
    ++report.total_cases;
    if (!(actual == expected)) record_failure(report, {ins, expected, actual});
  }
  return report;
}

CheckReport check_nor_equiv(const std::string& claim, const Circuit& c, std::size_t samples,
                            std::uint64_t seed) {
  const Circuit expanded = expand_to_nor(c);
  const Simulator original(elaborate(c));
  const Simulator nor_only(elaborate(expanded));
  const std::size_t leaves = c.input_shape().leaf_count();
  constexpr std::size_t kExhaustiveLeaves = 20;

  if (original.has_delay()) {
    constexpr std::size_t kTicks = 16;
    CheckReport report{claim, CheckMode::sampled(samples, seed), kTicks, 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto traces = random_traces(rng, leaves, kTicks);
      const auto expected = original.run(traces, kTicks);
      const auto actual = nor_only.run(traces, kTicks);
      ++report.total_cases;
      if (expected != actual) {
        auto as_value = [](const std::vector<BitTrace>& ts) {
          std::vector<Value> wires;
          for (const BitTrace& t : ts) wires.push_back(bits_value(t));
          return Value::vec(std::move(wires));
        };
        record_failure(report, {as_value(traces), as_value(expected), as_value(actual)});
      }
    }
    return report;
  }

  CheckReport report{claim,
                     leaves <= kExhaustiveLeaves ? CheckMode::exhaustive()
                                                 : CheckMode::sampled(samples, seed),
                     0, 0, 0, {}};
  auto check_one = [&](const std::vector<bool>& bits) {
    const auto expected = original.eval(bits);
    const auto actual = nor_only.eval(bits);
    ++report.total_cases;
    if (expected != actual) {
      record_failure(report, {bits_value(bits), bits_value(expected), bits_value(actual)});
    }
  };
  if (leaves <= kExhaustiveLeaves) {
    for (std::uint64_t x = 0; x < domain_size(leaves); ++x) check_one(counter_bits(x, leaves));
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) check_one(random_bits(rng, leaves));
  }
  return report;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "claim:    " << claim << "\n";
  os << "mode:     " << mode_name(mode);
  if (mode.kind == CheckMode::Kind::kSampled) {
    os << " (count " << mode.count << ", seed " << mode.seed;
    if (ticks) os << ", ticks " << ticks;
    os << ")";
  }
  os << "\n";
  os << "cases:    " << total_cases << "\n";
  os << "failures: " << failure_count << "\n";
  for (const Failure& f : failures) {
    os << "  input    " << f.input.to_string() << "\n";
    if (f.expected) os << "  expected " << f.expected->to_string() << "\n";
    os << "  actual   " << f.actual.to_string() << "\n";
  }
  os << "verdict:  " << (verdict() ? "holds" : "FAILS") << "\n";
  return os.str();
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["mode"] = mode_name(mode);
  if (mode.kind == CheckMode::Kind::kSampled) {
    j["sample_count"] = mode.count;
    j["seed"] = mode.seed;
  }
  if (ticks) j["ticks"] = ticks;
  j["total_cases"] = total_cases;
  j["failure_count"] = failure_count;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const Failure& f : failures) {
    nlohmann::ordered_json e;
    e["input"] = f.input.to_string();
    if (f.expected) e["expected"] = f.expected->to_string();
    e["actual"] = f.actual.to_string();
    fs.push_back(std::move(e));
  }
  j["failures"] = std::move(fs);
  j["verdict"] = verdict();
  return j.dump(2) + "\n";
}

}  // namespace wirekit
