#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/cyclotomic.hpp"

namespace kummer {

/// chi of order lambda mod p with chi(g) = a, g the least primitive root.
class Character {
 public:
  /// Throws std::invalid_argument unless p is prime and lambda >= 2 divides p - 1.
  Character(u64 p, unsigned lambda);

  u64 p() const { return p_; }
  unsigned order() const { return lambda_; }
  u64 generator() const { return g_; }
  u64 m() const { return (p_ - 1) / lambda_; }
  const CycRing& ring() const { return ring_; }
  /// Discrete log of t mod p base g; t must be nonzero mod p.
  u64 index(u64 t) const;
  /// Exponent e with chi^i(t) = a^e, reduced mod lambda.
  u64 exponent(long long i, u64 t) const;

 private:
  u64 p_;
  unsigned lambda_;
  u64 g_;
  CycRing ring_;
  std::vector<u64> log_;
};

/// The unsigned sum psi = sum_{t=2}^{p-1} chi^i(t) chi^k(1-t).
CycElt jacobi_psi(const Character& chi, long long i, long long k);
/// J(chi^i, chi^k) = -psi.
CycElt jacobi_sum(const Character& chi, long long i, long long k);

struct ReflectionReport {
  CycElt j;
  CycElt product;  // J * sigma_{-1}(J)
  bool holds = false;
};

/// Throws MathError("degenerate index") unless i, k, i+k are all nonzero mod lambda.
ReflectionReport reflection_identity(const Character& chi, long long i, long long k);

/// Z[X,Y]/(Phi_lambda(X), Phi_p(Y)); X carries a, Y carries the p-th root x.
class GaussSumRing {
 public:
  GaussSumRing(unsigned lambda, u64 p);
  unsigned lambda() const { return lambda_; }
  u64 p() const { return p_; }
  const CycRing& base() const { return base_; }

  /// Coefficient matrix: rows index powers of a (< phi(lambda)), columns
  /// powers of x (< p - 1).
  using Matrix = std::vector<IntVec>;

  class Elt {
   public:
    const GaussSumRing& ring() const { return *ring_; }
    const Matrix& coeffs() const { return m_; }
    Elt operator*(const Elt& o) const;
    Elt operator+(const Elt& o) const;
    Elt operator-() const;
    Elt pow(unsigned e) const;
    /// Image under x -> x^j, 0 < j < p.
    Elt substitute(u64 j) const;
    /// The element as a member of Z[a] when it involves no power of x.
    std::optional<CycElt> descend() const;
    bool operator==(const Elt& o) const { return m_ == o.m_; }

   private:
    friend class GaussSumRing;
    Elt(const GaussSumRing* r, Matrix m) : ring_(r), m_(std::move(m)) {}
    const GaussSumRing* ring_;
    Matrix m_;
  };

  Elt embed(const CycElt& x) const;
  /// Reduces an array indexed [a-exponent mod lambda][x-exponent mod p].
  Elt reduce(const Matrix& cyclic) const;

 private:
  unsigned lambda_;
  u64 p_;
  CycRing base_;
};

/// (a^i, x) = sum_j a^{ij} x^{g^j}.
GaussSumRing::Elt gauss_sum(const GaussSumRing& G, long long i);

struct GaussJacobiReport {
  bool product_matches = false;  // (a^i,x)(a^k,x) == psi_{i,k} (a^{i+k},x)
  CycElt psi;
  CycElt j;
};
GaussJacobiReport gauss_jacobi_relation(const Character& chi, long long i, long long k);

struct DescentReport {
  CycElt value;  // (a^i, x)^lambda in Z[a]
  bool substitution_invariant = false;
  /// chi^i(-1) p prod_{j=1}^{lambda-2} psi_{i, ij}, the Jacobi-sum expression
  /// of the same power; meaningful when lambda is prime.
  CycElt jacobi_expression;
  bool matches_jacobi = false;
};
/// Throws MathError if the power fails to descend to Z[a].
DescentReport gauss_power_descent(const GaussSumRing& G, long long i);

struct FcReport {
  u64 p = 0;
  long long i = 0, k = 0;
  u64 g = 0;
  u64 psi_residue = 0;  // psi_{i,k} with r -> g
  u64 j_residue = 0;    // J = -psi
  u64 expected = 0;     // 0, or the binomial quotient mod p
  Integer binomial_quotient = 0;
  bool holds = false;   // j_residue == expected
  bool holds_for_psi = false;
};
/// Throws MathError("excluded index") when i + k == p - 1 and
/// std::invalid_argument outside 0 < i, k < p - 1.
FcReport fc_check(u64 p, long long i, long long k);
std::vector<FcReport> fc_check_all(u64 p);

struct QuarticReport {
  u64 p = 0;
  Integer a, b;  // J(chi, chi) = a + b i
  Integer odd_part;
  u64 half_binomial = 0;  // C(2m, m) / 2 mod p
  bool norm_ok = false;
  bool congruence_ok = false;
};
QuarticReport quartic_demo(u64 p);

struct BinomialReport {
  u64 p = 0;
  Integer a, b;  // p = a^2 + 4 b^2, a, b > 0
  u64 binomial_residue = 0;
  bool holds = false;
};
BinomialReport binomial_congruence(u64 p);

struct StickelbergerEntry {
  unsigned t = 0;
  std::string map_label;  // xi^t
  int kummer = 0;
  int oracle = 0;
  bool fc_divisible = false;
  bool expected = false;  // 0 < 2t < lambda
};
struct StickelbergerReport {
  unsigned lambda = 0;
  u64 p = 0;
  u64 xi = 0;  // g^m mod p
  CycElt j;
  std::vector<StickelbergerEntry> entries;
  int total = 0;
  bool holds = false;
};
StickelbergerReport stickelberger_check(unsigned lambda, u64 p);

/// Valuations of (a, x)^lambda at the maps xi^t, t = 1..lambda-1, with the
/// consistency lambda v_t(J(chi,chi)) = 2 v_t(g(chi)^lambda) - v_t(g(chi^2)^lambda).
struct DescentValuationReport {
  std::vector<int> gauss_power;     // v_t((a,x)^lambda)
  std::vector<int> gauss_power_sq;  // v_t((a^2,x)^lambda)
  std::vector<int> jacobi;          // v_t(J(chi,chi))
  bool consistent = false;
};
DescentValuationReport descent_valuations(unsigned lambda, u64 p);

}  // namespace kummer
