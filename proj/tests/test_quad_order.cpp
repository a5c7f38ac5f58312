#include <doctest.h>

#include "kummerlab/quad_order.hpp"

using namespace kummer;

namespace {
std::vector<u64> brute_roots(const QuadOrder& O, u64 p) {
  std::vector<u64> r;
  for (u64 t = 0; t < p; ++t) {
    const Integer v = Integer(static_cast<unsigned long>(t * t)) + O.u() * static_cast<unsigned long>(t) + O.v();
    if (v % static_cast<unsigned long>(p) == 0) r.push_back(t);
  }
  return r;
}
}  // namespace

TEST_CASE("maps are the roots of the minimal polynomial mod p") {
  for (const auto& O : quad_catalog().orders)
    for (u64 p : primes_below(40)) {
      const auto maps = enumerate_quad_maps(O, p);
      const auto roots = brute_roots(O, p);
      if (roots.empty()) {
        REQUIRE(maps.size() == 1);
        CHECK(maps[0].f == 2);
        CHECK(maps[0].kernel.index() == static_cast<unsigned long>(p * p));
      } else {
        REQUIRE(maps.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
          CHECK(maps[i].theta.prime_field_value() == roots[i]);
          CHECK(maps[i].kernel.index() == static_cast<unsigned long>(p));
        }
      }
    }
}

TEST_CASE("multiplication norm and trace") {
  const QuadOrder O(0, 3);
  const QuadElt a{2, 1}, b{1, -1};
  CHECK(multiply(O, a, b) == QuadElt{5, -1});
  CHECK(norm(O, a) == 7);
  CHECK(trace(O, a) == 4);
  CHECK(norm(O, multiply(O, a, b)) == norm(O, a) * norm(O, b));
  CHECK_THROWS_AS(QuadOrder(0, -4), std::invalid_argument);
}

TEST_CASE("conductors") {
  CHECK(conductor(QuadOrder(0, 3)) == 2);
  CHECK(conductor(QuadOrder(0, 1)) == 1);
  CHECK(conductor(QuadOrder(0, 4)) == 2);
  CHECK(conductor(QuadOrder(0, 9)) == 3);
  CHECK(conductor(QuadOrder(0, 5)) == 1);
  CHECK(conductor(QuadOrder(0, -5)) == 2);
  CHECK(conductor(QuadOrder(-1, -1)) == 1);
  CHECK(is_integrally_closed(QuadOrder(1, 1)));
  CHECK_FALSE(is_integrally_closed(QuadOrder(0, 3)));
}

TEST_CASE("the valuation dichotomy fails exactly at singular primes") {
  const QuadOrder O(0, 3);
  const auto m2 = enumerate_quad_maps(O, 2);
  REQUIRE(m2.size() == 1);
  CHECK(b_doubleprime_check(O, m2[0], {1, 1}, {2, 0}).singular());
  for (u64 p : {2ul, 3ul, 5ul}) {
    const Integer P(static_cast<unsigned long>(p));
    const QuadOrder Z(0, P * P);
    const auto maps = enumerate_quad_maps(Z, p);
    REQUIRE(maps.size() == 1);
    CHECK(b_doubleprime_check(Z, maps[0], {0, 1}, {P, 0}).singular());
  }
  const QuadOrder G(0, 1);
  for (u64 p : {2ul, 3ul, 5ul, 13ul})
    for (const auto& m : enumerate_quad_maps(G, p))
      for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y) {
          if (x == 0 && y == 0) continue;
          CHECK_FALSE(b_doubleprime_check(G, m, {x, y}, {3, 1}).singular());
        }
  for (const auto& o : quad_catalog().orders)
    for (const auto& w : integral_witnesses(o))
      for (const auto& m : enumerate_quad_maps(o, w.ell)) CHECK(b_doubleprime_check(o, m, w.beta, w.gamma).singular());
}

TEST_CASE("prime square anomaly") {
  const PrimeSquareReport r = prime_square_anomaly();
  CHECK(r.square_equals_two_p);
  CHECK(r.p_differs_from_two);
  CHECK(r.maximal_two_is_prime);
  CHECK(r.p.index() == 2);
  CHECK(r.two.index() == 4);
  CHECK(r.p_squared.index() == 8);
}

TEST_CASE("Gauss lemma") {
  const QuadOrder O(0, 3);
  const GaussLemma g = gauss_lemma_check(O, {1, 0}, {1, 0});
  CHECK(g.reducible_over_K);
  CHECK_FALSE(g.reducible_over_O);
  const GaussLemma h = gauss_lemma_check(QuadOrder(0, 1), {0, 0}, {-4, 0});
  CHECK(h.reducible_over_K);
  CHECK(h.reducible_over_O);
  CHECK_FALSE(gauss_lemma_check(QuadOrder(0, 1), {0, 0}, {2, 0}).reducible_over_K);
  CHECK(gauss_lemma_check(QuadOrder(0, 1), {0, 0}, {1, 0}).reducible_over_O);
}

TEST_CASE("catalog contents") {
  const QuadCatalog& c = quad_catalog();
  CHECK(c.orders.size() == 7);
  CHECK(c.polynomials.size() == 10);
  int singular = 0;
  for (const auto& o : c.orders) singular += is_integrally_closed(o) ? 0 : 1;
  CHECK(singular == 4);
}
