#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wirekit/generators.hpp"
#include "wirekit/verify.hpp"

namespace wirekit {

// The named correctness claims about the generators, each runnable as a check.
struct ClaimOptions {
  // Exhaustive or sampled(count). Trace claims only accept sampled, where
  // `count` replaces the default number of traces.
  std::optional<CheckMode> mode;
  std::optional<std::uint64_t> seed;
};

struct ClaimSpec {
  std::string name;
  std::string help;
  std::vector<gen::ParamSpec> params;
  bool exhaustive_by_default = true;
  std::function<CheckReport(const gen::ParamValues&, const ClaimOptions&)> run;
};

const std::vector<ClaimSpec>& claims();
const ClaimSpec* find_claim(const std::string& name);

// Throws InvalidParams for an unknown claim, bad parameters, or a mode the
// claim does not support.
CheckReport run_claim(const std::string& name, const gen::ParamValues& params = {},
                      const ClaimOptions& options = {});

// Executable form of the add_parts lemma over all operands of widths n and m.
CheckReport check_add_parts(unsigned n, unsigned m, CheckMode mode = CheckMode::exhaustive());

// Spec functions on decoded values, shared with the tests.
namespace spec_fn {
Value hadd(const Value& ab);               // (a, b) -> (s, c)
Value fadd(const Value& cab);              // (cin, (a, b)) -> (sum, cout), bits
Value carry_add(unsigned n, const Value& cab);  // (cin, (a, b)) -> (sum, cout), words
Value split(unsigned n, unsigned p, const Value& x);       // word -> (low, high)
Value join(unsigned n, unsigned p, const Value& lohi);     // (low, high) -> word
Value dc(unsigned k, const Value& ab);     // (a, b) -> (((g, p), s), t)
Value mux(const Value& sxy);               // (sel, (x, y)) -> sel ? x : y
}  // namespace spec_fn

}  // namespace wirekit
