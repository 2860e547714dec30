#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wirekit/circuit.hpp"

namespace wirekit::gen {

// Fork2 (a + b) |> (XOR a b s & AND a b c)
Circuit hadd(const std::string& a = "a", const std::string& b = "b",
             const std::string& s = "s", const std::string& c = "c");

// cin + (a + b) -> sum + cout, from two half adders and an OR.
Circuit fadd(const std::string& a = "a", const std::string& b = "b",
             const std::string& cin = "cin", const std::string& sum = "sum",
             const std::string& cout = "cout");

// sumn(x, n+p) -> sumn(x, n) + sumn(x, p); leaf 0 stays in the low part.
Circuit hl(const std::string& x, std::size_t n, std::size_t p);
// sumn(x, n) + sumn(x, p) -> sumn(x, n+p)
Circuit combine(const std::string& x, std::size_t n, std::size_t p);

// Two HLs side by side, regrouped as (low a + low b) + (high a + high b).
Circuit highlows(const std::string& a, const std::string& b, std::size_t n, std::size_t p);
// Inverse grouping of highlows, recombining two buses at once.
Circuit combines(const std::string& x, const std::string& y, std::size_t n, std::size_t p);

// cin + (sumn(a,n) + sumn(b,n)) -> sumn(sum,n) + cout
Circuit ripple(std::size_t n, const std::string& cin = "cin", const std::string& a = "a",
               const std::string& b = "b", const std::string& cout = "cout",
               const std::string& sum = "sum");

// sel + (sumn(x,k) + sumn(y,k)) -> sumn(out,k); sel ? x : y
Circuit muxn(std::size_t k, const std::string& sel = "sel", const std::string& x = "x",
             const std::string& y = "y", const std::string& out = "out");

// (g_lo + p_lo) + (g_hi + p_hi) -> g + p
Circuit pg();

// Corrects the high halves of s and t for a dc(k) adder, k >= 1:
// (g + p) + (sumn(s,h) + sumn(t,h)) -> sumn(s,h) + sumn(t,h), h = 2^(k-1).
Circuit fix(std::size_t k);

// Divide-and-conquer adder over w = 2^k bit operands:
// sumn(a,w) + sumn(b,w) -> ((g + p) + sumn(s,w)) + sumn(t,w)
Circuit dc(std::size_t k);
Shape dc_input_shape(std::size_t k);
Shape dc_output_shape(std::size_t k);

// k cells in series; throws ShapeMismatch if the cell is not n -> n.
Circuit composen(const Circuit& cell, std::size_t k);
// k cells in parallel: sumn(n,k) -> sumn(m,k).
Circuit map(const Circuit& cell, std::size_t k);

// n layers of k parallel DFFs: sumn(x,k) -> sumn(x,k).
Circuit fifo(const std::string& x, std::size_t n, std::size_t k);

// load + a -> out, one bit of state behind a DFF in a feedback loop.
Circuit reg(const std::string& a = "a", const std::string& load = "load",
            const std::string& out = "out");

// ---- registry -------------------------------------------------------------

struct ParamSpec {
  enum class Kind { kNatural, kText };
  std::string name;
  Kind kind = Kind::kNatural;
  std::string default_value;
  std::size_t max = 0;                // naturals only
  std::vector<std::string> choices;   // text only; empty means any non-empty tag
  std::string help;
};

using ParamValues = std::map<std::string, std::string>;

struct GeneratorSpec {
  std::string name;
  std::string help;
  std::vector<ParamSpec> params;
  std::function<Circuit(const ParamValues&)> build;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

const std::vector<GeneratorSpec>& registry();
const GeneratorSpec* find_generator(const std::string& name);

// Fills defaults and validates `given` against the schema; throws
// InvalidParams on unknown names, bad naturals, values over the limit or
// choices outside the allowed set.
ParamValues resolve_params(const GeneratorSpec& spec, const ParamValues& given);
ParamValues resolve_params(const std::string& owner, const std::vector<ParamSpec>& params,
                           const ParamValues& given);

// resolve_params then build.
Circuit build(const std::string& name, const ParamValues& given = {});

std::size_t natural_param(const ParamValues& values, const std::string& name);

}  // namespace wirekit::gen
