#include <doctest.h>

#include "support.hpp"
#include "wirekit/codec.hpp"
#include "wirekit/value.hpp"

using namespace wirekit;
using wirekit::testing::Rng;

TEST_CASE("word codec is LSB first") {
  const Codec w = word_codec("x", 4);
  CHECK(w.shape() == Shape::sumn(Shape::unit("x"), 4));
  const Value v = w.decode(BoolBundle(w.shape(), {true, false, false, true}));
  CHECK(v == Value::word(4, 9));
  CHECK(w.encode(Value::word(4, 2)).values() == std::vector<bool>{false, true, false, false});
  CHECK_THROWS_AS(w.encode(Value::word(3, 2)), CodecError);
  CHECK_THROWS_AS(w.encode(Value::bit(true)), CodecError);
  CHECK(word_codec("x", 0).decode(BoolBundle(Shape::sumn(Shape::unit("x"), 0), {})) ==
        Value::word(0, 0));
}

TEST_CASE("value construction") {
  CHECK_THROWS_AS(Value::word(4, 16), CodecError);
  CHECK_THROWS_AS(Value::word(65, 0), CodecError);
  CHECK_NOTHROW(Value::word(64, ~std::uint64_t{0}));
  CHECK_THROWS_AS(Value::trace({Value::bit(true), Value::word(1, 1)}), CodecError);
  CHECK(Value::word(4, 9).to_string() == "9w4");
  CHECK(Value::pair(Value::bit(true), Value::bit(false)).to_string() == "(1, 0)");
  CHECK(Value::bit(false) < Value::bit(true));
  CHECK_THROWS_AS(Value::bit(true).first(), CodecError);
}

TEST_CASE("composite codecs") {
  const Codec c = pair_codec(unit_codec("cin"), pair_codec(word_codec("a", 2), word_codec("b", 2)));
  const Value v = Value::pair(Value::bit(true),
                              Value::pair(Value::word(2, 1), Value::word(2, 2)));
  const BoolBundle b = c.encode(v);
  CHECK(b.values() == std::vector<bool>{true, true, false, false, true});
  CHECK(c.decode(b) == v);
  CHECK_THROWS_AS(c.decode(BoolBundle(Shape::unit("cin"), {true})), ShapeMismatch);

  const Codec bits = vec_codec(unit_codec("x"), 3);
  CHECK(bits.decode(BoolBundle(bits.shape(), {true, false, true})).to_string() == "[1, 0, 1]");
  CHECK_THROWS_AS(bits.encode(Value::vec({Value::bit(true)})), CodecError);

  const Codec one = unit_word_codec("a");
  CHECK(one.shape() == Shape::unit("a"));
  CHECK(one.decode(BoolBundle(one.shape(), {true})) == Value::word(1, 1));
}

// Round trips in both directions over every bundle of every random shape up
// to 8 leaves.
TEST_CASE("codec round-trip laws, exhaustive up to 8 leaves") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape s = wirekit::testing::random_shape(rng, 4, 8);
    const Codec c = wirekit::testing::structural_codec(s);
    const std::size_t n = s.leaf_count();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const BoolBundle b(s, wirekit::testing::counter_bits(x, n));
      const Value v = c.decode(b);
      CHECK(c.encode(v) == b);
      CHECK(c.decode(c.encode(v)) == v);
    }
  }
}

TEST_CASE("stream codec") {
  const StreamCodec s(pair_codec(unit_codec("load"), unit_codec("a")), 3);
  const TraceBundle t(s.shape(), {{true, false, false}, {true, true, false}});
  const Value v = s.decode(t);
  CHECK(v.to_string() == "<(1, 1), (0, 1), (0, 0)>");
  CHECK(s.encode(v) == t);
  CHECK_THROWS_AS(s.decode(TraceBundle(s.shape(), std::vector<BitTrace>{{true}, {true, false}})), LengthMismatch);
  CHECK_THROWS_AS(s.decode(TraceBundle(s.shape(), std::vector<BitTrace>{{true}, {true}})), LengthMismatch);

  const StreamCodec words = stream_vec_codec("x", 2, 0);
  const TraceBundle w(words.shape(), {{true, false}, {false, false}});
  CHECK(words.decode(w).to_string() == "<[1, 0], [0, 0]>");
  CHECK(trace_length(w) == 2);
  CHECK(slice_at(w, 0).values() == std::vector<bool>{true, false});
  CHECK(trace_length(TraceBundle(Shape::sumn(Shape::unit("x"), 0), std::vector<BitTrace>{}), 7) == 7);
}
