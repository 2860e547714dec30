#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wirekit/circuit.hpp"
#include "wirekit/codec.hpp"
#include "wirekit/value.hpp"

namespace wirekit {

// Exhaustive checks refuse domains larger than this.
inline constexpr std::uint64_t kMaxExhaustiveCases = std::uint64_t{1} << 24;
// Reports keep at most this many counterexamples (the smallest ones).
inline constexpr std::size_t kMaxReportedFailures = 32;

struct CheckMode {
  enum class Kind { kExhaustive, kSampled };
  Kind kind = Kind::kExhaustive;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode sampled(std::size_t count, std::uint64_t seed) {
    return {Kind::kSampled, count, seed};
  }
};

// Random trace inputs: independent uniform bits per wire per tick.
struct TraceSampling {
  std::size_t count = 100;
  std::size_t ticks = 64;
  std::uint64_t seed = 1;
};

struct CheckReport {
  struct Failure {
    Value input;
    std::optional<Value> expected;  // absent for relational claims
    Value actual;

    friend bool operator==(const Failure&, const Failure&) = default;
  };

  std::string claim;
  CheckMode mode;
  std::size_t ticks = 0;  // trace length for stream claims, 0 otherwise
  std::uint64_t total_cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // canonical order, truncated

  bool verdict() const { return failure_count == 0; }

  std::string to_text() const;
  // Structured form, the same document the CLI writes with --format file.
  std::string to_json() const;
};

using ValueFn = std::function<Value(const Value&)>;
using TraceRelation = std::function<bool(const Value& ins, const Value& outs)>;

// decode(eval(c, encode(v))) == f(v) for every v in the input domain
// (exhaustive) or for `count` uniformly random inputs (sampled).
CheckReport check_implements(const std::string& claim, const Circuit& c, const Codec& in,
                             const Codec& out, const ValueFn& f,
                             CheckMode mode = CheckMode::exhaustive());

// relation(decoded input trace, decoded output trace) on random traces.
CheckReport check_realise_trace(const std::string& claim, const Circuit& c,
                                const StreamCodec& in, const StreamCodec& out,
                                const TraceRelation& relation, const TraceSampling& sampling);

// Clocked simulation equals the pointwise map of f on random traces.
// Throws HasDelay for circuits with a DFF.
CheckReport check_lift(const std::string& claim, const Circuit& c, const ValueFn& f,
                       const Codec& in, const Codec& out, const TraceSampling& sampling);

// eval(c) == eval(expand_to_nor(c)); exhaustive up to 20 input leaves,
// otherwise `samples` random inputs from `seed`. Circuits with a DFF are
// compared by clocked simulation on `samples` random traces of 16 ticks.
CheckReport check_nor_equiv(const std::string& claim, const Circuit& c,
                            std::size_t samples = 4096, std::uint64_t seed = 1);

// Bits as a Vec of Bit values, used for raw counterexamples.
Value bits_value(const std::vector<bool>& bits);

// Merges `failure` into the report, keeping the smallest kMaxReportedFailures.
void record_failure(CheckReport& report, CheckReport::Failure failure);

}  // namespace wirekit
