#include <doctest.h>

#include "kummerlab/errors.hpp"
#include "kummerlab/expr.hpp"
#include "kummerlab/valuation.hpp"
#include "oracles.hpp"

using namespace kummer;

namespace {
CycElt cyc(unsigned n, const char* s) { return parse_cyclotomic(s, CycRing::of(n)); }

JacobiMap map_xi(unsigned l, u64 p, u64 xi) {
  for (const auto& m : enumerate_jacobi_maps(l, p))
    if (m.xi.prime_field_value() == xi) return m;
  throw std::logic_error("no such map");
}
}  // namespace

TEST_CASE("uniformizer certification on worked examples") {
  const PeriodSystem ps = gaussian_periods(5, 4);
  const auto good = certify_uniformizer(map_xi(5, 11, 9), ps, 2, IntVec{1, 0, 0, 0});
  REQUIRE(good.has_value());
  CHECK(good->psi == cyc(5, "2 + a"));
  CHECK(good->period_norm == 11);
  CHECK_FALSE(certify_uniformizer(map_xi(5, 11, 3), ps, -3, IntVec{1, 0, 0, 0}).has_value());
  const JacobiMap r = enumerate_jacobi_maps(3, 3).at(0);
  CHECK(certify_uniformizer(r, decomposition_periods(r), 1, IntVec{-1, 0}).has_value());
}

TEST_CASE("every map over small primes gets a certified uniformizer") {
  for (unsigned l : {3u, 5u, 7u, 11u})
    for (u64 p : primes_below(60))
      for (const auto& m : enumerate_jacobi_maps(l, p)) {
        const KummerPrime k = make_kummer_prime(m);
        CHECK(apply(m, k.psi).is_zero());
        CHECK(valuation_oracle(k.psi, m) == 1);
      }
}

TEST_CASE("multiplicity of powers of a known generator") {
  // 2 + a generates the prime at xi = 9 over 11; 3 + a is a unit there.
  const KummerPrime k = make_kummer_prime(map_xi(5, 11, 9));
  const CycElt pi = cyc(5, "2 + a"), u = cyc(5, "1 + a + a^3");
  REQUIRE(oracle::evaluate(u, 9, 11) != 0);
  for (unsigned e = 0; e < 6; ++e) {
    CHECK(multiplicity(pi.pow(e) * u, k) == static_cast<int>(e));
    CHECK(valuation_oracle(pi.pow(e) * u, k.map) == static_cast<int>(e));
  }
  const JacobiMap ram = enumerate_jacobi_maps(5, 5).at(0);
  const KummerPrime kr = make_kummer_prime(ram);
  CHECK(multiplicity(cyc(5, "5"), kr) == 4);
  CHECK(multiplicity(cyc(5, "(1 - a)^4"), kr) == 4);
  CHECK(multiplicity(cyc(5, "a"), kr) == 0);
  CHECK_THROWS_AS(multiplicity(CycRing::of(5).zero(), kr), std::invalid_argument);
}

TEST_CASE("Kummer multiplicity agrees with the lattice oracle") {
  std::mt19937_64 rng(31);
  for (unsigned l : {3u, 5u, 7u}) {
    std::vector<KummerPrime> ks;
    for (u64 p : primes_below(30))
      for (const auto& m : enumerate_jacobi_maps(l, p)) ks.push_back(make_kummer_prime(m));
    for (int n = 0; n < 40; ++n) {
      const CycElt x = oracle::random_element(rng, CycRing::of(l), -4, 4);
      for (const auto& k : ks) {
        const int mu = multiplicity(x, k);
        CHECK(mu == valuation_oracle(x, k.map));
        const auto prof = divisibility_profile(x, k, mu + 2);
        for (int j = 0; j <= mu + 2; ++j) CHECK(prof[static_cast<std::size_t>(j)] == (j <= mu));
      }
    }
  }
}

TEST_CASE("factorization accounts for the whole norm") {
  std::mt19937_64 rng(41);
  for (unsigned l : {3u, 5u, 7u}) {
    PrimeCache cache(l, 3, 6);
    for (int n = 0; n < 40; ++n) {
      const CycElt x = oracle::random_element(rng, CycRing::of(l), -4, 4);
      const IdealFactorization f = factorize(x, {}, &cache);
      Integer n_abs = abs(f.norm);
      for (const auto& r : f.records)
        for (int i = 0; i < r.mu * static_cast<int>(r.prime->map.f); ++i) n_abs /= static_cast<unsigned long>(r.prime->map.p);
      CHECK(n_abs == 1);
    }
  }
  CHECK(factorize(cyc(5, "1")).records.empty());
  CHECK(factorize(cyc(5, "a^3")).unit_remark == "unit");
  CHECK_THROWS_AS(factorize(CycRing::of(5).zero()), std::invalid_argument);
}

TEST_CASE("divisibility by exact division and by valuations") {
  CHECK(divides(cyc(5, "1 - a"), cyc(5, "5")));
  CHECK_FALSE(divides(cyc(5, "(1 - a)^5"), cyc(5, "5")));
  CHECK(divides(cyc(5, "2 + a"), cyc(5, "11")));
  CHECK(exact_quotient(cyc(5, "11"), cyc(5, "2 + a")) == cofactor(cyc(5, "2 + a")));
  std::mt19937_64 rng(51);
  const CycRing R = CycRing::of(5);
  for (int n = 0; n < 60; ++n) {
    const CycElt y = oracle::random_element(rng, R, -2, 2);
    const CycElt x = n % 2 ? oracle::random_element(rng, R, -3, 3) : y * oracle::random_element(rng, R, -2, 2);
    const DivisibilityVerdict v = divisibility(y, x);
    CHECK(v.by_division == v.by_valuations);
    if (n % 2 == 0) CHECK(v.by_division);
  }
}

TEST_CASE("definedness of fractions") {
  const JacobiMap m = map_xi(5, 11, 9);
  const KummerPrime k = make_kummer_prime(m);
  CHECK(is_defined_at(cyc(5, "11"), cyc(5, "2 + a"), k));
  CHECK(is_defined_at_oracle(cyc(5, "11"), cyc(5, "2 + a"), m));
  CHECK_FALSE(is_defined_at(cyc(5, "1"), cyc(5, "2 + a"), k));
  CHECK_FALSE(is_defined_at_oracle(cyc(5, "1"), cyc(5, "2 + a"), m));
}
