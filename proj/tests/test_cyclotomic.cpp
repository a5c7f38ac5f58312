#include <doctest.h>

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/expr.hpp"
#include "oracles.hpp"

using namespace kummer;

namespace {
CycElt cyc(unsigned n, const char* s) { return parse_cyclotomic(s, CycRing::of(n)); }
}  // namespace

TEST_CASE("root of unity relations") {
  for (unsigned n : {3u, 5u, 7u, 12u}) {
    const CycRing R = CycRing::of(n);
    CHECK(R.root().pow(n) == R.one());
    CHECK(R.root_power(-1) * R.root() == R.one());
  }
  // 1 + a + ... + a^(l-1) = 0 for prime l.
  CycElt s = CycRing::of(7).zero();
  for (int k = 0; k < 7; ++k) s += CycRing::of(7).root_power(k);
  CHECK(s.is_zero());
  CHECK(cyc(5, "a^4") == cyc(5, "-1 - a - a^2 - a^3"));
}

TEST_CASE("worked norms") {
  CHECK(norm(cyc(5, "1 - a")) == 5);
  CHECK(norm(cyc(5, "2 + a")) == 11);
  CHECK(norm(cyc(5, "3")) == 81);
  CHECK(norm(cyc(7, "1 - a")) == 7);
}

TEST_CASE("norm agrees with the resultant and is multiplicative") {
  std::mt19937_64 rng(11);
  for (unsigned n : {3u, 5u, 7u, 8u, 12u}) {
    const CycRing R = CycRing::of(n);
    for (int i = 0; i < 40; ++i) {
      const CycElt x = oracle::random_element(rng, R, -5, 5), y = oracle::random_element(rng, R, -5, 5);
      CHECK(norm(x) == norm_by_resultant(x));
      CHECK(norm(x * y) == norm(x) * norm(y));
      CHECK(x * cofactor(x) == R.integer(norm(x)));
    }
  }
}

TEST_CASE("conjugations are ring automorphisms") {
  std::mt19937_64 rng(12);
  const CycRing R = CycRing::of(7);
  for (int i = 0; i < 30; ++i) {
    const CycElt x = oracle::random_element(rng, R, -3, 3), y = oracle::random_element(rng, R, -3, 3);
    for (long long k = 1; k < 7; ++k) {
      CHECK(conjugate(x * y, k) == conjugate(x, k) * conjugate(y, k));
      CHECK(conjugate(x + y, k) == conjugate(x, k) + conjugate(y, k));
    }
    CHECK(conjugate(conjugate(x, 3), 5) == x);
  }
  CHECK(conjugate(conjugate(cyc(5, "a"), 2), 2) == cyc(5, "-1 - a - a^2 - a^3"));
  CHECK_THROWS_AS(conjugate(cyc(5, "a"), 5), std::invalid_argument);
}

TEST_CASE("Gaussian periods") {
  const PeriodSystem ps = gaussian_periods(5, 2);
  CHECK(ps.periods[0] == cyc(5, "a + a^4"));
  CHECK(ps.periods[1] == cyc(5, "a^2 + a^3"));
  // Periods satisfy X^2 + X - 1.
  for (const auto& eta : ps.periods) CHECK((eta * eta + eta - CycRing::of(5).one()).is_zero());
  CHECK(express_in_periods(cyc(5, "-1"), ps).has_value());
  CHECK_FALSE(express_in_periods(cyc(5, "a"), ps).has_value());
  for (unsigned l : {7u, 13u})
    for (unsigned e = 1; e <= l - 1; ++e) {
      if ((l - 1) % e) continue;
      const PeriodSystem q = gaussian_periods(l, e);
      CycElt sum = CycRing::of(l).zero();
      for (const auto& eta : q.periods) sum += eta;
      CHECK(sum == CycRing::of(l).integer(-1));
      // sigma_g rotates the periods cyclically.
      for (unsigned i = 0; i < e; ++i)
        CHECK(conjugate(q.periods[i], static_cast<long long>(q.g)) == q.periods[(i + 1) % e]);
    }
  CHECK_THROWS_AS(gaussian_periods(7, 4), std::invalid_argument);
}
