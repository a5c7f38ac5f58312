#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummerlab/integer.hpp"

namespace kummer {

/// Natural numbers whose residue mod m lies in a fixed residue set. Hilbert
/// monoids use a subgroup H of (Z/mZ)^x; the singular monoid N uses {0,1,2} mod 4.
class ResidueMonoid {
 public:
  /// Throws std::invalid_argument unless H is a subgroup of (Z/mZ)^x.
  static ResidueMonoid hilbert(u64 m, std::vector<u64> subgroup);
  static ResidueMonoid singular();

  u64 modulus() const { return m_; }
  bool is_hilbert() const { return hilbert_; }
  /// Sorted residue set.
  const std::vector<u64>& residues() const { return residues_; }
  bool contains(const Integer& a) const;
  bool contains(u64 a) const;
  bool contains_residue(u64 r) const { return member_[r % m_]; }
  std::string describe() const;

 private:
  ResidueMonoid(u64 m, std::vector<u64> residues, bool hilbert);
  u64 m_;
  std::vector<u64> residues_;
  std::vector<bool> member_;
  bool hilbert_;
};

bool is_irreducible(const ResidueMonoid& M, u64 a);

/// Factorizations of a into irreducibles of M, each sorted ascending, listed
/// in lexicographic order. With all == false only the first is returned.
/// Throws std::invalid_argument if a is not in M, BoundExceeded past `cap`
/// divisor checks.
std::vector<std::vector<u64>> factor_into_irreducibles(const ResidueMonoid& M, u64 a, bool all,
                                                       u64 cap = 10000);

struct MonoidIdealPrime {
  u64 p = 0;
  int exponent = 0;
  u64 cls = 0;  // p mod m
  bool principal = false;
};

/// Exponents of the ideal primes in a. Throws MathError ("outside theory")
/// when gcd(a, m) > 1, std::invalid_argument when a is not in M.
std::vector<MonoidIdealPrime> ideal_factorization(const ResidueMonoid& M, u64 a);

struct DefinedAt {
  bool defined = false;
  u64 value = 0;          // phi_p(a/b) when defined
  bool infinite = false;  // not defined, but the reciprocal is defined with value 0
  /// a/b = witness_num / witness_den with both in M and p not dividing the denominator.
  Integer witness_num = 0, witness_den = 0;
};

/// Decides whether phi_p is defined at a/b by enumerating multipliers s in
/// [1, m p]. Throws BoundExceeded when m p exceeds `cap`.
DefinedAt defined_at(const ResidueMonoid& M, u64 p, const Integer& a, const Integer& b,
                     u64 cap = 10000);

/// p if [p] is in H, otherwise p r with r the least natural number coprime to
/// p with r = [p]^{-1} mod m. Hilbert monoids only; requires gcd(p, m) = 1.
u64 uniformizer(const ResidueMonoid& M, u64 p);
/// q in M with p dividing q exactly once.
bool is_uniformizer(const ResidueMonoid& M, u64 p, u64 q);

/// Largest mu with phi_p defined at a / q^mu.
int multiplicity_monoid(const ResidueMonoid& M, u64 p, const Integer& a, u64 q, u64 cap = 10000);

struct ClassGroup {
  u64 order = 0;
  /// Coset representatives (least element of each coset of H in G), ascending.
  std::vector<u64> cosets;
  /// table[i][j] = index of cosets[i] * cosets[j].
  std::vector<std::vector<std::size_t>> table;
  /// Invariant factors d_1 | d_2 | ... of the group.
  std::vector<u64> invariant_factors;
  /// Least prime in each coset, 0 when none was found below the cap.
  std::vector<u64> least_primes;
  bool law_well_defined = false;
  std::string structure() const;
};
ClassGroup class_group(const ResidueMonoid& M, u64 prime_cap = 10000);

struct SquareTest {
  bool square_in_M = false;
  bool square_in_QM = false;
};
/// Hilbert monoids only; a must be in M.
SquareTest square_test(const ResidueMonoid& M, u64 a);

struct SingularReport {
  DefinedAt six_over_two;
  DefinedAt two_over_six;
  bool nine_square_in_N = false;
  std::optional<std::pair<u64, u64>> nine_root_in_QN;  // c/d with (c/d)^2 = 9
  bool holds = false;
};
SingularReport singular_demo(u64 cap = 10000);

}  // namespace kummer
