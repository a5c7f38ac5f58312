#include <doctest.h>

#include "kummerlab/expr.hpp"
#include "oracles.hpp"

using namespace kummer;

TEST_CASE("element syntax") {
  const CycRing R = CycRing::of(5);
  CHECK(parse_cyclotomic("1 - a + 2a^3", R).coeffs() == IntVec{1, -1, 0, 2});
  CHECK(parse_cyclotomic("a^5", R) == R.one());
  CHECK(parse_cyclotomic("  -(1-a)^2*3 ", R) == R.integer(-3) * (R.one() - R.root()).pow(2));
  CHECK(parse_cyclotomic("3a^2a", R) == R.integer(3) * R.root_power(3));
  CHECK(parse_cyclotomic("a^12345", R) == R.root_power(12345 % 5));
  CHECK(parse_quad("2 + t", QuadOrder(0, 3)) == QuadElt{2, 1});
  CHECK(parse_quad("t^2", QuadOrder(0, 3)) == QuadElt{-3, 0});
  CHECK(parse_quad("t^2", QuadOrder(1, 1)) == QuadElt{-1, -1});
  CHECK(parse_polynomial("x^2 - 1", 'x').to_string('x') == "x^2 - 1");
}

TEST_CASE("parse errors report positions") {
  const CycRing R = CycRing::of(5);
  auto position = [&](const char* s) -> long {
    try {
      (void)parse_cyclotomic(s, R);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("1 + + a") == 4);
  CHECK(position("") == 0);
  CHECK(position("(1 + a") == 6);
  CHECK(position("2b") == 1);
  CHECK(position("a^") == 2);
  CHECK(position("a^1000001") >= 0);
  CHECK(position("1 + t") == 4);
}

TEST_CASE("render then parse round-trips") {
  std::mt19937_64 rng(61);
  for (unsigned n : {3u, 5u, 7u, 12u}) {
    const CycRing R = CycRing::of(n);
    for (int i = 0; i < 100; ++i) {
      const CycElt x = oracle::random_element(rng, R, -20, 20);
      const std::string s = x.to_string();
      CHECK(parse_cyclotomic(s, R) == x);
      CHECK(parse_cyclotomic(s, R).to_string() == s);
    }
    CHECK(parse_cyclotomic(R.zero().to_string(), R).is_zero());
  }
  const QuadOrder O(0, 5);
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y) {
      const QuadElt e{x, y};
      CHECK(parse_quad(to_string(e), O) == e);
    }
}
