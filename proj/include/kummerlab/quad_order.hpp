#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummerlab/finite_field.hpp"
#include "kummerlab/lattice.hpp"

namespace kummer {

/// Z[t] with t^2 + u t + v = 0, basis {1, t}.
class QuadOrder {
 public:
  /// Throws std::invalid_argument when u^2 - 4v is a perfect square.
  QuadOrder(Integer u, Integer v, std::string name = {});

  const Integer& u() const { return u_; }
  const Integer& v() const { return v_; }
  const std::string& name() const { return name_; }
  Integer discriminant() const { return u_ * u_ - 4 * v_; }
  const MultTable& mult_table() const { return table_; }

  friend bool operator==(const QuadOrder& a, const QuadOrder& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

 private:
  Integer u_, v_;
  std::string name_;
  MultTable table_;
};

/// x + y t.
struct QuadElt {
  Integer x = 0, y = 0;
  IntVec coords() const { return {x, y}; }
  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const QuadElt&, const QuadElt&) = default;
};

QuadElt multiply(const QuadOrder& O, const QuadElt& a, const QuadElt& b);
Integer norm(const QuadOrder& O, const QuadElt& a);
Integer trace(const QuadOrder& O, const QuadElt& a);
std::string to_string(const QuadElt& a, char var = 't');

struct QuadJacobiMap {
  u64 p = 0;
  int f = 0;
  FieldPtr field;
  FFElement theta;  // image of t
  IntLattice kernel;
  std::string label() const;
};

/// One map per root of t's minimal polynomial mod p, or a single degree-2
/// map when it is irreducible mod p. Roots ascending.
std::vector<QuadJacobiMap> enumerate_quad_maps(const QuadOrder& O, u64 p);
FFElement apply(const QuadJacobiMap& map, const QuadElt& x);

struct B2Check {
  bool at_x = false;
  bool at_inv = false;
  bool singular() const { return !at_x && !at_inv; }
};
/// Definedness of the map at beta/gamma and gamma/beta via colon ideals.
/// Throws std::invalid_argument when beta or gamma is zero.
B2Check b_doubleprime_check(const QuadOrder& O, const QuadJacobiMap& map, const QuadElt& beta,
                            const QuadElt& gamma);

/// Ideal generated by the given elements.
IntLattice ideal(const QuadOrder& O, const std::vector<QuadElt>& gens);

struct PrimeSquareReport {
  IntLattice p, p_squared, two_p, two;
  bool square_equals_two_p = false;
  bool p_differs_from_two = false;
  /// In the maximal order Z[(1+sqrt(-3))/2] the prime 2 stays inert.
  bool maximal_two_is_prime = false;
  bool holds = false;
};
PrimeSquareReport prime_square_anomaly();

/// f with disc = f^2 * disc(O_K).
Integer conductor(const QuadOrder& O);
bool is_integrally_closed(const QuadOrder& O);

/// A fraction beta/gamma integral over O but not in O, one for each prime
/// dividing the conductor.
struct IntegralWitness {
  u64 ell = 0;
  QuadElt beta, gamma;
};
std::vector<IntegralWitness> integral_witnesses(const QuadOrder& O);

struct GaussLemma {
  bool reducible_over_K = false;
  bool reducible_over_O = false;
  std::string roots;  // in the form (a + b sqrt(D)), empty when irreducible over K
};
/// T^2 + c1 T + c0 with coefficients in O.
GaussLemma gauss_lemma_check(const QuadOrder& O, const QuadElt& c1, const QuadElt& c0);

struct QuadCatalog {
  std::vector<QuadOrder> orders;
  std::vector<std::pair<QuadElt, QuadElt>> polynomials;  // (c1, c0)
};
/// The catalog compiled in from data/quad_orders.json.
const QuadCatalog& quad_catalog();

}  // namespace kummer
