#include "doctest.h"

#include <random>

#include "nsdeg/bitset.hpp"

using nsdeg::Bitset;

namespace {

Bitset random_bits(std::mt19937_64& rng, std::size_t n) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) b.set(i);
  return b;
}

}  // namespace

TEST_CASE("tail_start and find_first") {
  Bitset b(130);
  CHECK(b.find_first() == 130);
  CHECK(b.tail_start() == 130);
  b.set_from(70);
  CHECK(b.find_first() == 70);
  CHECK(b.tail_start() == 70);
  b.set(3);
  CHECK(b.find_first() == 3);
  CHECK(b.tail_start() == 70);
  CHECK(Bitset(0).tail_start() == 0);
  CHECK(Bitset(65, true).tail_start() == 0);
}

TEST_CASE("word-level shifts agree with bit loops") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 200;
    const std::size_t m = 1 + rng() % 200;
    const std::size_t shift = rng() % 220;
    const Bitset a = random_bits(rng, n);
    const Bitset b = random_bits(rng, m);

    Bitset ored = a;
    ored.or_shifted(b, shift);
    bool hit = false;
    for (std::size_t i = 0; i < n; ++i) {
      const bool from_b = i >= shift && i - shift < m && b.test(i - shift);
      CHECK(ored.test(i) == (a.test(i) || from_b));
      hit = hit || (a.test(i) && from_b);
    }
    CHECK(a.intersects_shifted(b, shift) == hit);

    const std::size_t from = rng() % 220;
    const std::size_t len = rng() % 150;
    const Bitset sl = a.slice(from, len);
    for (std::size_t i = 0; i < len; ++i) CHECK(sl.test(i) == (from + i < n && a.test(from + i)));
  }
}

TEST_CASE("complement keeps padding clear") {
  Bitset b(70);
  b.set(1);
  const Bitset c = ~b;
  CHECK(c.count() == 69);
  CHECK(~c == b);
}
