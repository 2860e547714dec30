#include "wirekit/codec.hpp"

#include <utility>

namespace wirekit {

Value Codec::decode(const BoolBundle& b) const {
  if (!(b.shape() == shape_)) throw ShapeMismatch("codec decode", shape_, b.shape());
  return decode_(b);
}

BoolBundle Codec::encode(const Value& v) const {
  BoolBundle out = encode_(v);
  if (!(out.shape() == shape_)) throw ShapeMismatch("codec encode", shape_, out.shape());
  return out;
}

Codec unit_codec(const std::string& tag) {
  Shape s = Shape::unit(tag);
  return Codec(
      s, [](const BoolBundle& b) { return Value::bit(b.at(0)); },
      [s](const Value& v) { return BoolBundle(s, std::vector<bool>{v.as_bit()}); });
}

Codec pair_codec(const Codec& first, const Codec& second) {
  return Codec(
      Shape::sum(first.shape(), second.shape()),
      [first, second](const BoolBundle& b) {
        return Value::pair(first.decode(bundle_left(b)), second.decode(bundle_right(b)));
      },
      [first, second](const Value& v) {
        return bundle_append(first.encode(v.first()), second.encode(v.second()));
      });
}

Codec vec_codec(const Codec& element, std::size_t count) {
  Shape s = Shape::sumn(element.shape(), count);
  const std::size_t per = element.shape().leaf_count();
  return Codec(
      s,
      [element, count, per](const BoolBundle& b) {
        std::vector<Value> items;
        items.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
          std::vector<bool> part(b.values().begin() + i * per,
                                 b.values().begin() + (i + 1) * per);
          items.push_back(element.decode(BoolBundle(element.shape(), std::move(part))));
        }
        return Value::vec(std::move(items));
      },
      [element, count, s](const Value& v) {
        if (v.kind() != Value::Kind::kVec || v.length() != count) {
          throw CodecError("expected a vector of length " + std::to_string(count) +
                           ", got " + v.to_string());
        }
        std::vector<bool> bits;
        for (const Value& item : v.elements()) {
          const BoolBundle part = element.encode(item);
          bits.insert(bits.end(), part.values().begin(), part.values().end());
        }
        return BoolBundle(s, std::move(bits));
      });
}

Codec word_codec(const std::string& tag, unsigned width) {
  if (width > Value::kMaxWordWidth) {
    throw CodecError("word codec width " + std::to_string(width) + " exceeds 64");
  }
  Shape s = Shape::sumn(Shape::unit(tag), width);
  return Codec(
      s,
      [width](const BoolBundle& b) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i) {
          if (b.at(i)) v |= std::uint64_t{1} << i;
        }
        return Value::word(width, v);
      },
      [width, s](const Value& v) {
        if (v.width() != width) {
          throw CodecError("expected a " + std::to_string(width) + "-bit word, got " +
                           v.to_string());
        }
        std::vector<bool> bits(width);
        for (unsigned i = 0; i < width; ++i) bits[i] = (v.val() >> i) & 1U;
        return BoolBundle(s, std::move(bits));
      });
}

Codec unit_word_codec(const std::string& tag) {
  Shape s = Shape::unit(tag);
  return Codec(
      s, [](const BoolBundle& b) { return Value::word(1, b.at(0) ? 1 : 0); },
      [s](const Value& v) {
        if (v.width() != 1) throw CodecError("expected a 1-bit word, got " + v.to_string());
        return BoolBundle(s, std::vector<bool>{v.val() == 1});
      });
}

std::size_t trace_length(const TraceBundle& b, std::size_t empty_length) {
  if (b.size() == 0) return empty_length;
  const std::size_t len = b.at(0).size();
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b.at(i).size() != len) {
      throw LengthMismatch("trace on leaf " + std::to_string(i) + " has length " +
                           std::to_string(b.at(i).size()) + ", leaf 0 has " +
                           std::to_string(len));
    }
  }
  return len;
}

BoolBundle slice_at(const TraceBundle& b, std::size_t tick) {
  std::vector<bool> bits(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bits[i] = b.at(i).at(tick);
  return BoolBundle(b.shape(), std::move(bits));
}

Value StreamCodec::decode(const TraceBundle& b) const {
  if (!(b.shape() == shape())) throw ShapeMismatch("stream decode", shape(), b.shape());
  const std::size_t len = trace_length(b, horizon_);
  if (horizon_ != 0 && len != horizon_) {
    throw LengthMismatch("traces have length " + std::to_string(len) + ", horizon is " +
                         std::to_string(horizon_));
  }
  std::vector<Value> samples;
  samples.reserve(len);
  for (std::size_t t = 0; t < len; ++t) samples.push_back(element_.decode(slice_at(b, t)));
  return Value::trace(std::move(samples));
}

TraceBundle StreamCodec::encode(const Value& trace) const {
  if (trace.kind() != Value::Kind::kTrace) {
    throw CodecError("expected a trace, got " + trace.to_string());
  }
  const std::size_t len = trace.length();
  if (horizon_ != 0 && len != horizon_) {
    throw LengthMismatch("trace has length " + std::to_string(len) + ", horizon is " +
                         std::to_string(horizon_));
  }
  TraceBundle out = TraceBundle::filled(shape(), BitTrace(len));
  for (std::size_t t = 0; t < len; ++t) {
    BoolBundle slice = element_.encode(trace.elements()[t]);
    for (std::size_t i = 0; i < slice.size(); ++i) out.values()[i][t] = slice.at(i);
  }
  return out;
}

StreamCodec stream_vec_codec(const std::string& tag, std::size_t k, std::size_t horizon) {
  return StreamCodec(vec_codec(unit_codec(tag), k), horizon);
}

}  // namespace wirekit
