#include "wirekit/wordspec.hpp"

#include "wirekit/errors.hpp"

namespace wirekit::spec {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 pow2(unsigned n) { return u128{1} << n; }

void check_width(unsigned n) {
  if (n > Value::kMaxWordWidth) {
    throw CodecError("word width " + std::to_string(n) + " exceeds 64");
  }
}

void expect_width(const Word& w, unsigned n, const char* what) {
  if (w.width() != n) {
    throw CodecError(std::string(what) + ": expected width " + std::to_string(n) + ", got " +
                     std::to_string(w.width()));
  }
}

}  // namespace

Word::Word(unsigned width, std::uint64_t val) : width_(width), val_(val) {
  check_width(width);
  if (width < 64 && (val >> width) != 0) {
    throw CodecError("value " + std::to_string(val) + " does not fit in " +
                     std::to_string(width) + " bits");
  }
}

Word repr(unsigned n, std::int64_t x) {
  check_width(n);
  const i128 m = static_cast<i128>(pow2(n));
  i128 r = static_cast<i128>(x) % m;
  if (r < 0) r += m;
  return Word(n, static_cast<std::uint64_t>(r));
}

Word low(unsigned n, unsigned p, const Word& x) {
  expect_width(x, n + p, "low");
  return Word(n, static_cast<std::uint64_t>(u128{x.val()} % pow2(n)));
}

Word high(unsigned n, unsigned p, const Word& x) {
  expect_width(x, n + p, "high");
  return Word(p, static_cast<std::uint64_t>(u128{x.val()} / pow2(n)));
}

Word combine(unsigned n, unsigned p, const Word& lo, const Word& hi) {
  expect_width(lo, n, "combine low");
  expect_width(hi, p, "combine high");
  check_width(n + p);
  return Word(n + p, static_cast<std::uint64_t>(u128{lo.val()} + u128{hi.val()} * pow2(n)));
}

std::pair<Word, bool> carry_add(unsigned n, const Word& x, const Word& y, bool b) {
  expect_width(x, n, "carry_add x");
  expect_width(y, n, "carry_add y");
  const u128 e = u128{x.val()} + u128{y.val()} + (b ? 1 : 0);
  return {Word(n, static_cast<std::uint64_t>(e % pow2(n))), pow2(n) <= e};
}

std::pair<bool, bool> hadd_fn(bool a, bool b) { return {a != b, a && b}; }

std::pair<bool, bool> fadd_fn(bool c, bool a, bool b) {
  const bool axb = a != b;
  return {a != (b != c), (a && b) || (c && axb)};
}

bool add_parts_holds(unsigned n, unsigned m, const Word& x_lo, const Word& y_lo,
                     const Word& x_hi, const Word& y_hi, bool cin) {
  const auto [sum_lo, middle] = carry_add(n, x_lo, y_lo, cin);
  const auto [sum_hi, cout] = carry_add(m, x_hi, y_hi, middle);
  const Word sum = combine(n, m, sum_lo, sum_hi);
  const auto whole = carry_add(n + m, combine(n, m, x_lo, x_hi), combine(n, m, y_lo, y_hi), cin);
  return whole.first == sum && whole.second == cout;
}

DcResult dc_fn(unsigned k, const Word& x, const Word& y) {
  if (k >= 7) throw CodecError("dc_fn operand width 2^" + std::to_string(k) + " exceeds 64");
  const unsigned w = 1U << k;
  const auto [s, g] = carry_add(w, x, y, false);
  const auto [t, p] = carry_add(w, x, y, true);
  return DcResult{g, p, s, t};
}

Value pre_fn(const Value& d, const Value& trace) {
  if (trace.kind() != Value::Kind::kTrace) {
    throw CodecError("pre_fn expects a trace, got " + trace.to_string());
  }
  return Value::trace(pre_fn(d, trace.elements()));
}

std::vector<BitVector> fifo_fn(std::size_t n, std::size_t k, const std::vector<BitVector>& trace) {
  std::vector<BitVector> out;
  out.reserve(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    if (trace[t].size() != k) {
      throw LengthMismatch("fifo_fn sample " + std::to_string(t) + " has " +
                           std::to_string(trace[t].size()) + " bits, expected " +
                           std::to_string(k));
    }
    out.push_back(t >= n ? trace[t - n] : BitVector(k, false));
  }
  return out;
}

BitTrace register_fn(const std::vector<std::pair<bool, bool>>& ins) {
  BitTrace out(ins.size());
  for (std::size_t t = 0; t + 1 < ins.size(); ++t) {
    out[t + 1] = ins[t].first ? ins[t].second : out[t];
  }
  return out;
}

bool register_relation_holds(const std::vector<std::pair<bool, bool>>& ins,
                             const BitTrace& outs) {
  if (ins.size() != outs.size()) return false;
  BitTrace next_of(outs.size());
  for (std::size_t t = 0; t < outs.size(); ++t) {
    next_of[t] = ins[t].first ? ins[t].second : outs[t];
  }
  return pre_fn(false, next_of) == outs;
}

}  // namespace wirekit::spec
