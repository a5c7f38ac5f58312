#include <doctest.h>

#include <algorithm>

#include "kummerlab/expr.hpp"
#include "kummerlab/ideal_primes.hpp"
#include "oracles.hpp"

using namespace kummer;

TEST_CASE("map census matches the order formula") {
  for (unsigned l : {3u, 5u, 7u, 11u, 13u})
    for (u64 p : primes_below(120)) {
      const auto maps = enumerate_jacobi_maps(l, p);
      const u64 f = p == l ? 1 : oracle::order(p % l, l);
      CHECK(maps.size() == (p == l ? 1 : (l - 1) / f));
      for (const auto& m : maps) CHECK(m.f == f);
    }
}

TEST_CASE("degree-one maps are exactly the roots of Phi_lambda mod p") {
  for (unsigned l : {5u, 7u})
    for (u64 p : primes_below(80)) {
      if (p % l != 1) continue;
      std::vector<u64> roots, got;
      for (u64 x = 1; x < p; ++x)
        if (oracle::order(x, p) == l) roots.push_back(x);
      for (const auto& m : enumerate_jacobi_maps(l, p)) got.push_back(m.xi.prime_field_value());
      std::sort(got.begin(), got.end());
      CHECK(got == roots);
    }
}

TEST_CASE("maps are ring homomorphisms that agree with direct evaluation") {
  std::mt19937_64 rng(21);
  const CycRing R = CycRing::of(7);
  for (u64 p : {29ul, 43ul, 71ul})
    for (const auto& m : enumerate_jacobi_maps(7, p))
      for (int i = 0; i < 20; ++i) {
        const CycElt x = oracle::random_element(rng, R, -9, 9), y = oracle::random_element(rng, R, -9, 9);
        CHECK(apply(m, x * y) == apply(m, x) * apply(m, y));
        CHECK(apply(m, x).prime_field_value() == oracle::evaluate(x, m.xi.prime_field_value(), p));
      }
}

TEST_CASE("kernels have index p^f and contain exactly the zeros of the map") {
  for (auto [l, p] : std::vector<std::pair<unsigned, u64>>{{5, 11}, {5, 2}, {5, 5}, {7, 2}, {7, 13}}) {
    for (const auto& m : enumerate_jacobi_maps(l, p)) {
      const IdealPrimeKernel k = kernel(m);
      Integer q = 1;
      for (unsigned i = 0; i < m.f; ++i) q *= static_cast<unsigned long>(p);
      CHECK(k.lattice.index() == q);
      std::mt19937_64 rng(p * 31 + l);
      for (int n = 0; n < 60; ++n) {
        const CycElt x = oracle::random_element(rng, CycRing::of(l), -3, 3);
        CHECK(k.lattice.contains(x.coeffs()) == apply(m, x).is_zero());
      }
    }
  }
}

TEST_CASE("worked maps") {
  const CycRing R = CycRing::of(5);
  const auto inert = enumerate_jacobi_maps(5, 2);
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].f == 4);
  CHECK(kernel(inert[0]).lattice.index() == 16);
  const auto ram = enumerate_jacobi_maps(5, 5);
  REQUIRE(ram.size() == 1);
  CHECK(ram[0].xi.prime_field_value() == 1);
  CHECK(apply(ram[0], parse_cyclotomic("1 - a", R)).is_zero());
  for (const auto& m : enumerate_jacobi_maps(5, 11))
    if (m.xi.prime_field_value() == 3) {
      CHECK(apply(m, parse_cyclotomic("2 + a", R)).prime_field_value() == 5);
      CHECK(period_residues(m, gaussian_periods(5, 4)) == std::vector<u64>{3, 9, 4, 5});
    }
  // The e maps of p are the cyclic rotations of one u-vector.
  const auto maps = enumerate_jacobi_maps(7, 29);
  const PeriodSystem ps = gaussian_periods(7, 6);
  const auto u0 = period_residues(maps[0], ps);
  for (const auto& m : maps) {
    const auto u = period_residues(m, ps);
    bool rotation = false;
    for (std::size_t s = 0; s < u.size(); ++s) {
      auto r = u0;
      std::rotate(r.begin(), r.begin() + static_cast<long>(s), r.end());
      rotation = rotation || r == u;
    }
    CHECK(rotation);
  }
  CHECK_THROWS_AS(enumerate_jacobi_maps(6, 7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_jacobi_maps(5, 9), std::invalid_argument);
}

TEST_CASE("conjugation permutes the maps") {
  const auto maps = enumerate_jacobi_maps(5, 11);
  for (long long k = 1; k < 5; ++k) {
    std::vector<std::size_t> pos;
    for (const auto& m : maps) pos.push_back(canonical_position(maps, precompose_conjugation(m, k)));
    std::sort(pos.begin(), pos.end());
    CHECK(pos == std::vector<std::size_t>{0, 1, 2, 3});
  }
}
