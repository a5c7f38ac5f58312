#include <doctest.h>

#include <numeric>

#include "kummerlab/errors.hpp"
#include "kummerlab/monoid.hpp"

using namespace kummer;

namespace {
bool brute_irreducible(const ResidueMonoid& M, u64 a) {
  if (a == 1) return false;
  for (u64 d = 2; d < a; ++d)
    if (a % d == 0 && M.contains(d) && M.contains(a / d)) return false;
  return true;
}
}  // namespace

TEST_CASE("membership and irreducibility") {
  const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
  CHECK(M.contains(u64{9}));
  CHECK_FALSE(M.contains(u64{3}));
  for (u64 a = 1; a < 600; ++a)
    if (M.contains(a)) CHECK(is_irreducible(M, a) == brute_irreducible(M, a));
  CHECK_THROWS_AS(ResidueMonoid::hilbert(5, {1, 2}), std::invalid_argument);
}

TEST_CASE("non-unique factorization of 441") {
  const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
  const auto f = factor_into_irreducibles(M, 441, true);
  CHECK(f == std::vector<std::vector<u64>>{{9, 49}, {21, 21}});
  for (const auto& fac : f) {
    CHECK(std::accumulate(fac.begin(), fac.end(), u64{1}, std::multiplies<>()) == 441);
    for (u64 q : fac) CHECK(brute_irreducible(M, q));
  }
  const auto ip = ideal_factorization(M, 441);
  REQUIRE(ip.size() == 2);
  CHECK(ip[0].p == 3);
  CHECK(ip[0].exponent == 2);
  CHECK_FALSE(ip[0].principal);
  CHECK(ip[1].p == 7);
  CHECK(ip[1].exponent == 2);
  CHECK_THROWS_AS(factor_into_irreducibles(M, 3, true), std::invalid_argument);
  CHECK_THROWS_AS(ideal_factorization(M, 3), std::invalid_argument);
}

TEST_CASE("definedness and multiplicities") {
  const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
  const DefinedAt a = defined_at(M, 3, 9, 21), b = defined_at(M, 3, 9, 441), c = defined_at(M, 3, 9, 9261);
  CHECK(a.defined);
  CHECK(a.value == 0);
  CHECK(a.witness_num * 21 == a.witness_den * 9);
  CHECK(b.defined);
  CHECK(b.value == 1);
  CHECK_FALSE(c.defined);
  CHECK(c.infinite);
  CHECK(uniformizer(M, 3) == 21);
  CHECK(uniformizer(M, 5) == 5);
  CHECK(is_uniformizer(M, 3, 21));
  CHECK_FALSE(is_uniformizer(M, 3, 9));
  for (u64 q : {21ul, 33ul, 57ul}) CHECK(multiplicity_monoid(M, 3, 9, q) == 2);
  CHECK(multiplicity_monoid(M, 3, 81 * 5, 21) == 4);
  CHECK_THROWS_AS(defined_at(M, 3, 9, 21, 5), BoundExceeded);
}

TEST_CASE("class groups") {
  CHECK(class_group(ResidueMonoid::hilbert(4, {1})).structure() == "C2");
  CHECK(class_group(ResidueMonoid::hilbert(5, {1, 2, 3, 4})).order == 1);
  const ClassGroup g = class_group(ResidueMonoid::hilbert(8, {1}));
  CHECK(g.structure() == "C2 x C2");
  CHECK(g.law_well_defined);
  const ClassGroup h = class_group(ResidueMonoid::hilbert(7, {1}));
  CHECK(h.order == 6);
  CHECK(h.invariant_factors == std::vector<u64>{6});
  for (u64 p : h.least_primes) CHECK(p != 0);
}

TEST_CASE("square tests agree by brute force") {
  const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
  for (u64 a = 1; a < 3000; ++a) {
    if (!M.contains(a)) continue;
    u64 r = 1;
    while ((r + 1) * (r + 1) <= a) ++r;
    const bool sq = r * r == a;
    const SquareTest t = square_test(M, a);
    CHECK(t.square_in_M == (sq && M.contains(r)));
    CHECK(t.square_in_M == t.square_in_QM);
  }
}

TEST_CASE("the singular monoid N") {
  const ResidueMonoid N = ResidueMonoid::singular();
  CHECK(N.contains(u64{6}));
  CHECK_FALSE(N.contains(u64{3}));
  const SingularReport r = singular_demo();
  CHECK_FALSE(r.six_over_two.defined);
  CHECK_FALSE(r.two_over_six.defined);
  CHECK_FALSE(r.nine_square_in_N);
  REQUIRE(r.nine_root_in_QN.has_value());
  const auto [c, d] = *r.nine_root_in_QN;
  CHECK(c * c == 9 * d * d);
  CHECK(N.contains(c));
  CHECK(N.contains(d));
  CHECK(r.holds);
}
