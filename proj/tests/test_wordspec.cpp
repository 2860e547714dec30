#include <doctest.h>

#include "wirekit/wordspec.hpp"

using namespace wirekit;
using namespace wirekit::spec;

TEST_CASE("repr") {
  CHECK(repr(4, 18) == Word(4, 2));
  CHECK(repr(5, 0) == Word(5, 0));
  CHECK(repr(1, 3) == Word(1, 1));
  CHECK(repr(4, -1) == Word(4, 15));
  CHECK(repr(64, -1) == Word(64, ~std::uint64_t{0}));
  CHECK_THROWS_AS(Word(3, 8), CodecError);
}

TEST_CASE("low, high, combine") {
  CHECK(low(2, 2, Word(4, 13)) == Word(2, 1));
  CHECK(high(2, 2, Word(4, 13)) == Word(2, 3));
  CHECK(combine(2, 2, Word(2, 1), Word(2, 3)) == Word(4, 13));
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned p = 0; n + p <= 10; ++p) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n + p)); ++x) {
        const Word w(n + p, x);
        CHECK(combine(n, p, low(n, p, w), high(n, p, w)) == w);
      }
    }
  }
}

TEST_CASE("carry_add") {
  CHECK(carry_add(4, Word(4, 9), Word(4, 9), false) == std::pair{Word(4, 2), true});
  CHECK(carry_add(1, Word(1, 1), Word(1, 1), true) == std::pair{Word(1, 1), true});
  for (std::uint64_t x = 0; x < 16; ++x) {
    CHECK(carry_add(4, Word(4, x), Word(4, 0), false) == std::pair{Word(4, x), false});
  }
  const std::uint64_t max = ~std::uint64_t{0};
  CHECK(carry_add(64, Word(64, max), Word(64, max), true) == std::pair{Word(64, max), true});
}

TEST_CASE("hadd and fadd") {
  CHECK(hadd_fn(true, true) == std::pair{false, true});
  for (bool b : {false, true}) CHECK(hadd_fn(false, b) == std::pair{b, false});
  for (int i = 0; i < 8; ++i) {
    const bool c = i & 1, a = i & 2, b = i & 4;
    auto [w, carry] = carry_add(1, Word(1, a), Word(1, b), c);
    CHECK(fadd_fn(c, a, b) == std::pair{w.val() == 1, carry});
  }
}

TEST_CASE("add_parts holds exhaustively for small widths") {
  for (unsigned n = 1; n <= 2; ++n) {
    const unsigned m = n;
    for (std::uint64_t xl = 0; xl < (1U << n); ++xl)
      for (std::uint64_t yl = 0; yl < (1U << n); ++yl)
        for (std::uint64_t xh = 0; xh < (1U << m); ++xh)
          for (std::uint64_t yh = 0; yh < (1U << m); ++yh)
            for (bool c : {false, true})
              CHECK(add_parts_holds(n, m, Word(n, xl), Word(n, yl), Word(m, xh), Word(m, yh), c));
  }
  CHECK(add_parts_holds(3, 2, Word(3, 0), Word(3, 0), Word(2, 3), Word(2, 1), false));
}

TEST_CASE("dc_fn") {
  CHECK(dc_fn(0, Word(1, 1), Word(1, 1)) == DcResult{true, true, Word(1, 0), Word(1, 1)});
  for (unsigned k = 0; k <= 4; ++k) {
    const unsigned w = 1U << k;
    CHECK(dc_fn(k, Word(w, 0), Word(w, 0)) == DcResult{false, false, Word(w, 0), Word(w, 1 % (1ULL << w))});
  }
  // t is the successor of s, wrapping; the carry of t differs only on wrap.
  for (unsigned k = 0; k <= 2; ++k) {
    const unsigned w = 1U << k;
    for (std::uint64_t x = 0; x < (1U << w); ++x) {
      for (std::uint64_t y = 0; y < (1U << w); ++y) {
        const DcResult r = dc_fn(k, Word(w, x), Word(w, y));
        CHECK(r.t == repr(w, static_cast<std::int64_t>(r.s.val()) + 1));
        CHECK(r.p == (r.g || r.s.val() + 1 == (1ULL << w)));
      }
    }
  }
}

TEST_CASE("pre, fifo and register reference functions") {
  CHECK(pre_fn(false, std::vector<bool>{true, false}) == std::vector<bool>{false, true});
  std::vector<BitVector> v;
  for (int t = 0; t < 8; ++t) v.push_back({t % 3 == 0});
  const auto out = fifo_fn(2, 1, v);
  CHECK(out[5] == v[3]);
  CHECK(out[0] == BitVector{false});
  CHECK(out[1] == BitVector{false});
  CHECK(out[2] == v[0]);
  // fifo is n-fold pre
  auto twice = pre_fn(BitVector{false}, pre_fn(BitVector{false}, v));
  CHECK(out == twice);

  const std::vector<std::pair<bool, bool>> ins{{true, true}, {false, false}, {false, true}};
  CHECK(register_fn(ins) == BitTrace{false, true, true});
  CHECK(register_relation_holds(ins, register_fn(ins)));
  CHECK_FALSE(register_relation_holds(ins, BitTrace{false, true, false}));
  CHECK_FALSE(register_relation_holds(ins, BitTrace{true, true, true}));
}
