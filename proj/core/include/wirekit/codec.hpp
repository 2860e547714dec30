#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "wirekit/shape.hpp"
#include "wirekit/value.hpp"

namespace wirekit {

// Invertible translation between boolean bundles over `shape` and structured
// values. decode(encode(v)) == v and encode(decode(b)) == b.
class Codec {
 public:
  using Decoder = std::function<Value(const BoolBundle&)>;
  using Encoder = std::function<BoolBundle(const Value&)>;

  Codec(Shape shape, Decoder decode, Encoder encode)
      : shape_(std::move(shape)), decode_(std::move(decode)), encode_(std::move(encode)) {}

  const Shape& shape() const { return shape_; }
  Value decode(const BoolBundle& b) const;
  BoolBundle encode(const Value& v) const;

 private:
  Shape shape_;
  Decoder decode_;
  Encoder encode_;
};

Codec unit_codec(const std::string& tag);
Codec pair_codec(const Codec& first, const Codec& second);
Codec vec_codec(const Codec& element, std::size_t count);

// Bits of SumN(Unit(tag), n) as an n-bit word; leaf At(0) is the LSB.
Codec word_codec(const std::string& tag, unsigned width);

// A single Unit(tag) leaf read as a 1-bit word.
Codec unit_word_codec(const std::string& tag);

// Lifts a boolean codec to bundles of equal-length traces: a bundle of
// traces decodes to a Trace whose sample t is the element codec applied to
// the bundle slice at tick t.
class StreamCodec {
 public:
  // horizon 0 accepts any common length.
  explicit StreamCodec(Codec element, std::size_t horizon = 0)
      : element_(std::move(element)), horizon_(horizon) {}

  const Shape& shape() const { return element_.shape(); }
  const Codec& element() const { return element_; }
  std::size_t horizon() const { return horizon_; }

  // Throws LengthMismatch on ragged traces or a length other than the horizon.
  Value decode(const TraceBundle& b) const;
  TraceBundle encode(const Value& trace) const;

 private:
  Codec element_;
  std::size_t horizon_;
};

// k wires of traces <-> a trace of k-bit vectors.
StreamCodec stream_vec_codec(const std::string& tag, std::size_t k, std::size_t horizon);

// Common length of every trace in a bundle; throws LengthMismatch if ragged.
// A bundle with no leaves has length `empty_length`.
std::size_t trace_length(const TraceBundle& b, std::size_t empty_length = 0);

BoolBundle slice_at(const TraceBundle& b, std::size_t tick);

}  // namespace wirekit
