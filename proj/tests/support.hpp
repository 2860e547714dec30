#pragma once

// Random shapes, bundles and well-formed circuits for property tests.

#include <random>
#include <string>
#include <vector>

#include "wirekit/circuit.hpp"
#include "wirekit/codec.hpp"
#include "wirekit/gates.hpp"
#include "wirekit/generators.hpp"

namespace wirekit::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline std::string pick_tag(Rng& rng) {
  static const char* kTags[] = {"a", "b", "c", "x"};
  return kTags[pick(rng, 4)];
}

// Every generated shape has at least one leaf.
inline Shape random_shape(Rng& rng, int depth, std::size_t max_leaves = 8) {
  if (depth == 0 || max_leaves <= 1) return Shape::unit(pick_tag(rng));
  switch (pick(rng, 3)) {
    case 0: return Shape::unit(pick_tag(rng));
    case 1: {
      Shape l = random_shape(rng, depth - 1, max_leaves / 2);
      return Shape::sum(l, random_shape(rng, depth - 1, max_leaves - l.leaf_count()));
    }
    default: {
      Shape base = random_shape(rng, depth - 1, max_leaves / 2);
      const std::size_t most = std::max<std::size_t>(1, max_leaves / base.leaf_count());
      return Shape::sumn(base, 1 + pick(rng, std::min<std::size_t>(most, 3)));
    }
  }
}

inline std::vector<bool> random_bits(Rng& rng, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rng() & 1U;
  return out;
}

inline std::vector<bool> counter_bits(std::uint64_t x, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (x >> i) & 1U;
  return out;
}

inline std::vector<BitTrace> random_traces(Rng& rng, std::size_t wires, std::size_t ticks) {
  std::vector<BitTrace> out;
  for (std::size_t w = 0; w < wires; ++w) out.push_back(random_bits(rng, ticks));
  return out;
}

inline Circuit random_rewire(Rng& rng, const Shape& in, const Shape& out) {
  std::vector<std::size_t> sources;
  for (std::size_t o = 0; o < out.leaf_count(); ++o) sources.push_back(pick(rng, in.leaf_count()));
  return rewire(in, out, std::move(sources));
}

inline Circuit random_gate(Rng& rng) {
  static constexpr GateKind kComb[] = {GateKind::kNor, GateKind::kNot, GateKind::kAnd,
                                       GateKind::kOr, GateKind::kXor, GateKind::kMux};
  const GateKind k = kComb[pick(rng, 6)];
  std::vector<std::string> tags;
  for (std::size_t i = 0; i <= input_arity(k); ++i) tags.push_back(pick_tag(rng));
  return atom(GateInstance(k, std::move(tags)));
}

// Loop-free, DFF-free.
inline Circuit random_comb(Rng& rng, int depth) {
  if (depth == 0) return random_gate(rng);
  switch (pick(rng, 4)) {
    case 0: return random_gate(rng);
    case 1: return random_comb(rng, depth - 1) & random_comb(rng, depth - 1);
    default: {
      Circuit x = random_comb(rng, depth - 1);
      Circuit y = random_comb(rng, depth - 1);
      return x >> random_rewire(rng, x.output_shape(), y.input_shape()) >> y;
    }
  }
}

// A loop whose feedback bus passes through DFFs, around a random body.
inline Circuit random_clocked(Rng& rng, int depth) {
  const Shape n = random_shape(rng, 2, 4);
  const Shape m = random_shape(rng, 2, 4);
  const std::size_t q = 1 + pick(rng, 3);
  const Shape fb = Shape::sumn(Shape::unit("f"), q);
  Circuit x = random_comb(rng, depth);
  Circuit body = random_rewire(rng, Shape::sum(n, fb), x.input_shape()) >> x >>
                 random_rewire(rng, x.output_shape(), Shape::sum(m, fb)) >>
                 (identity(m) & gen::map(atom(dff_gate("f", "f")), q));
  return loop(std::move(body));
}

// Codec mirroring a shape: Unit -> Bit, Sum -> Pair, SumN -> Vec.
inline Codec structural_codec(const Shape& s) {
  switch (s.kind()) {
    case Shape::Kind::kUnit: return unit_codec(s.tag());
    case Shape::Kind::kSum: return pair_codec(structural_codec(s.left()), structural_codec(s.right()));
    case Shape::Kind::kSumN: return vec_codec(structural_codec(s.base()), s.count());
  }
  return unit_codec(s.tag());
}

}  // namespace wirekit::testing
