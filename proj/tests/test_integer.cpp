#include <doctest.h>

#include "kummerlab/errors.hpp"
#include "kummerlab/integer.hpp"
#include "kummerlab/lattice.hpp"
#include "kummerlab/poly.hpp"
#include "oracles.hpp"

using namespace kummer;

TEST_CASE("primality and orders agree with trial division") {
  for (u64 n = 0; n < 2000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
  for (u64 n : {7ul, 11ul, 13ul, 29ul, 31ul})
    for (u64 a = 1; a < n; ++a) CHECK(multiplicative_order(a, n) == oracle::order(a, n));
  for (u64 p : primes_below(200))
    if (p > 2) CHECK(least_primitive_root(p) == oracle::primitive_root(p));
}

TEST_CASE("primes_below lists exactly the primes") {
  std::vector<u64> want;
  for (u64 n = 0; n < 500; ++n)
    if (oracle::is_prime(n)) want.push_back(n);
  CHECK(primes_below(500) == want);
}

TEST_CASE("factor_integer reconstructs its input") {
  for (unsigned long n = 2; n < 3000; n += 7) {
    Integer prod = 1;
    for (const auto& [p, e] : factor_integer(Integer(n))) {
      CHECK(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == Integer(n));
  }
  const Integer big = Integer("1000003") * Integer("1000033") * 12;
  CHECK_THROWS_AS(factor_integer(big, 1000), BoundExceeded);
  const auto f = factor_integer(big, 1000100);
  Integer prod = 1;
  for (const auto& [p, e] : f)
    for (int i = 0; i < e; ++i) prod *= p;
  CHECK(prod == big);
  CHECK(valuation_of(Integer(96), Integer(2)) == 5);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).to_string() == "X - 1");
  CHECK(cyclotomic_polynomial(5).to_string() == "X^4 + X^3 + X^2 + X + 1");
  CHECK(cyclotomic_polynomial(12).to_string() == "X^4 - X^2 + 1");
  // Phi_n(1) = p for prime powers p^k and 1 otherwise (n > 1).
  for (unsigned n = 2; n < 60; ++n) {
    const auto f = factor_u64(n);
    const Integer want = f.size() == 1 ? Integer(static_cast<unsigned long>(f[0].first)) : Integer(1);
    CHECK(cyclotomic_polynomial(n).evaluate(1) == want);
  }
}

TEST_CASE("resultant and determinant") {
  // Res(X - r, f) = (-1)^deg f f(r)... checked via f(r) for monic linear factor.
  const PolyInt f(IntVec{Integer(3), Integer(0), Integer(1)});  // X^2 + 3
  const PolyInt lin(IntVec{Integer(-2), Integer(1)});            // X - 2
  CHECK(abs(resultant(lin, f)) == 7);
  CHECK(determinant({{Integer(2), Integer(1)}, {Integer(7), Integer(4)}}) == 1);
}

TEST_CASE("hnf index equals the absolute determinant") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    std::vector<IntVec> rows(3, IntVec(3));
    std::vector<std::vector<Integer>> m(3, std::vector<Integer>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rows[i][j] = m[i][j] = static_cast<long>(rng() % 11) - 5;
    const Integer det = abs(determinant(m));
    if (det == 0) continue;
    const IntLattice L = hnf(rows, 3);
    CHECK(L.index() == det);
    for (const auto& r : rows) CHECK(L.contains(r));
  }
}
