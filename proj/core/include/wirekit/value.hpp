#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wirekit {

// Structured data carried by a wire bundle once decoded: a bit, a pair, a
// vector, an n-bit unsigned word, or a finite trace of samples.
class Value {
 public:
  enum class Kind { kBit, kPair, kVec, kWord, kTrace };

  static constexpr unsigned kMaxWordWidth = 64;

  static Value bit(bool b);
  static Value pair(Value first, Value second);
  static Value vec(std::vector<Value> elements);
  // Throws CodecError unless width <= 64 and val < 2^width.
  static Value word(unsigned width, std::uint64_t val);
  // Throws CodecError if samples do not share one structure.
  static Value trace(std::vector<Value> samples);

  Kind kind() const { return kind_; }
  bool as_bit() const;
  const Value& first() const;
  const Value& second() const;
  const std::vector<Value>& elements() const;  // Vec elements or Trace samples
  unsigned width() const;
  std::uint64_t val() const;
  std::size_t length() const;  // Vec or Trace length

  // Same constructors all the way down, same widths and vector lengths.
  bool same_structure(const Value& other) const;

  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  Kind kind_ = Kind::kBit;
  bool bit_ = false;
  unsigned width_ = 0;
  std::uint64_t val_ = 0;
  std::vector<Value> children_;
};

}  // namespace wirekit
