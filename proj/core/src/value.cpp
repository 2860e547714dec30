#include "wirekit/value.hpp"

#include <sstream>

#include "wirekit/errors.hpp"

namespace wirekit {

Value Value::bit(bool b) {
  Value v;
  v.kind_ = Kind::kBit;
  v.bit_ = b;
  return v;
}

Value Value::pair(Value first, Value second) {
  Value v;
  v.kind_ = Kind::kPair;
  v.children_ = {std::move(first), std::move(second)};
  return v;
}

Value Value::vec(std::vector<Value> elements) {
  Value v;
  v.kind_ = Kind::kVec;
  v.children_ = std::move(elements);
  return v;
}

Value Value::word(unsigned width, std::uint64_t val) {
  if (width > kMaxWordWidth) {
    throw CodecError("word width " + std::to_string(width) + " exceeds 64");
  }
  if (width < 64 && (val >> width) != 0) {
    throw CodecError("value " + std::to_string(val) + " out of range for a " +
                     std::to_string(width) + "-bit word");
  }
  Value v;
  v.kind_ = Kind::kWord;
  v.width_ = width;
  v.val_ = val;
  return v;
}

Value Value::trace(std::vector<Value> samples) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!samples[i].same_structure(samples[0])) {
      throw CodecError("trace sample " + std::to_string(i) +
                       " differs in structure from sample 0");
    }
  }
  Value v;
  v.kind_ = Kind::kTrace;
  v.children_ = std::move(samples);
  return v;
}

bool Value::as_bit() const {
  if (kind_ != Kind::kBit) throw CodecError("expected a bit, got " + to_string());
  return bit_;
}

const Value& Value::first() const {
  if (kind_ != Kind::kPair) throw CodecError("expected a pair, got " + to_string());
  return children_[0];
}

const Value& Value::second() const {
  if (kind_ != Kind::kPair) throw CodecError("expected a pair, got " + to_string());
  return children_[1];
}

const std::vector<Value>& Value::elements() const {
  if (kind_ != Kind::kVec && kind_ != Kind::kTrace) {
    throw CodecError("expected a vector or trace, got " + to_string());
  }
  return children_;
}

unsigned Value::width() const {
  if (kind_ != Kind::kWord) throw CodecError("expected a word, got " + to_string());
  return width_;
}

std::uint64_t Value::val() const {
  if (kind_ != Kind::kWord) throw CodecError("expected a word, got " + to_string());
  return val_;
}

std::size_t Value::length() const { return elements().size(); }

bool Value::same_structure(const Value& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::kBit: return true;
    case Kind::kWord: return width_ == other.width_;
    case Kind::kPair:
    case Kind::kVec:
    case Kind::kTrace:
      if (children_.size() != other.children_.size()) return false;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (!children_[i].same_structure(other.children_[i])) return false;
      }
      return true;
  }
  return false;
}

std::string Value::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kBit: os << (bit_ ? "1" : "0"); break;
    case Kind::kWord: os << val_ << "w" << width_; break;
    case Kind::kPair:
      os << "(" << children_[0].to_string() << ", " << children_[1].to_string() << ")";
      break;
    case Kind::kVec:
    case Kind::kTrace:
      os << (kind_ == Kind::kVec ? "[" : "<");
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) os << ", ";
        os << children_[i].to_string();
      }
      os << (kind_ == Kind::kVec ? "]" : ">");
      break;
  }
  return os.str();
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Value::Kind::kBit: return a.bit_ <=> b.bit_;
    case Value::Kind::kWord:
      if (auto c = a.width_ <=> b.width_; c != 0) return c;
      return a.val_ <=> b.val_;
    default: break;
  }
  std::size_t n = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  }
  return a.children_.size() <=> b.children_.size();
}

}  // namespace wirekit
