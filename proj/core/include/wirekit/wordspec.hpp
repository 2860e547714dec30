#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wirekit/shape.hpp"
#include "wirekit/value.hpp"

namespace wirekit::spec {

// n-bit unsigned word, 0 <= val < 2^width, width <= 64.
class Word {
 public:
  // Throws CodecError when out of range.
  Word(unsigned width, std::uint64_t val);

  unsigned width() const { return width_; }
  std::uint64_t val() const { return val_; }

  Value to_value() const { return Value::word(width_, val_); }
  static Word from_value(const Value& v) { return Word(v.width(), v.val()); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  unsigned width_;
  std::uint64_t val_;
};

// x mod 2^n, canonical non-negative residue.
Word repr(unsigned n, std::int64_t x);

Word low(unsigned n, unsigned p, const Word& x);
Word high(unsigned n, unsigned p, const Word& x);
Word combine(unsigned n, unsigned p, const Word& lo, const Word& hi);

// e = x + y + b; returns (e mod 2^n, 2^n <= e).
std::pair<Word, bool> carry_add(unsigned n, const Word& x, const Word& y, bool b);

std::pair<bool, bool> hadd_fn(bool a, bool b);          // (a xor b, a and b)
std::pair<bool, bool> fadd_fn(bool c, bool a, bool b);  // (sum, carry)

// Low-then-high chained addition agrees with the (n+m)-bit addition.
bool add_parts_holds(unsigned n, unsigned m, const Word& x_lo, const Word& y_lo,
                     const Word& x_hi, const Word& y_hi, bool cin);

struct DcResult {
  bool g;  // carry out assuming no carry in
  bool p;  // carry out assuming a carry in
  Word s;  // sum assuming no carry in
  Word t;  // sum assuming a carry in

  friend bool operator==(const DcResult&, const DcResult&) = default;
};

// Operands of width 2^k.
DcResult dc_fn(unsigned k, const Word& x, const Word& y);

// Output at tick 0 is d, then the input delayed by one tick.
template <typename T>
std::vector<T> pre_fn(const T& d, const std::vector<T>& trace) {
  std::vector<T> out;
  out.reserve(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) out.push_back(t == 0 ? d : trace[t - 1]);
  return out;
}

Value pre_fn(const Value& d, const Value& trace);

using BitVector = std::vector<bool>;

// out(t) = trace(t - n) for t >= n, the all-false k-vector before.
std::vector<BitVector> fifo_fn(std::size_t n, std::size_t k, const std::vector<BitVector>& trace);

// ins(t) = (load, a). out(0) = false, out(t+1) = load(t) ? a(t) : out(t).
BitTrace register_fn(const std::vector<std::pair<bool, bool>>& ins);

// outs = pre false (fun t => if load(t) then a(t) else outs(t)).
bool register_relation_holds(const std::vector<std::pair<bool, bool>>& ins,
                             const BitTrace& outs);

}  // namespace wirekit::spec
