#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kummerlab/lattice.hpp"
#include "kummerlab/poly.hpp"

namespace kummer {

class CycElt;

/// Z[X]/(Phi_n). Power basis 1, a, ..., a^{d-1} with d = euler_phi(n).
class CycRing {
 public:
  /// Rings are interned per conductor; copies are cheap.
  static CycRing of(unsigned n);

  unsigned conductor() const;
  std::size_t degree() const;
  bool prime_conductor() const;
  const PolyInt& modulus() const;
  /// Structure constants in the power basis.
  const MultTable& mult_table() const;

  CycElt zero() const;
  CycElt one() const;
  CycElt integer(const Integer& c) const;
  /// The class of X, a primitive n-th root of unity.
  CycElt root() const;
  /// a^k for any integer k (negative exponents allowed).
  CycElt root_power(long long k) const;
  CycElt from_coeffs(IntVec coeffs) const;
  /// Reduces an arbitrary integer polynomial in a.
  CycElt from_poly(const PolyInt& f) const;

  friend bool operator==(const CycRing& a, const CycRing& b) { return a.data_ == b.data_; }

 private:
  struct Data;
  explicit CycRing(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Element of Z[X]/(Phi_n), stored by its reduced coefficient vector.
class CycElt {
 public:
  CycElt(CycRing ring, IntVec coeffs);

  const CycRing& ring() const { return ring_; }
  const IntVec& coeffs() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; requires is_rational().
  const Integer& rational_value() const;
  PolyInt to_poly() const { return PolyInt(c_); }
  /// True when every coefficient is divisible by m.
  bool divisible_by(const Integer& m) const;
  /// Coefficientwise exact division; requires divisible_by(m).
  CycElt divexact(const Integer& m) const;

  CycElt& operator+=(const CycElt& o);
  CycElt& operator-=(const CycElt& o);
  CycElt& operator*=(const CycElt& o);
  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(CycElt a, const CycElt& b) { return a *= b; }
  friend CycElt operator*(const Integer& s, CycElt a);
  CycElt operator-() const;
  CycElt pow(unsigned e) const;

  friend bool operator==(const CycElt& a, const CycElt& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

  /// Renders as a polynomial in `var`, e.g. "1 - a + 2a^3".
  std::string to_string(char var = 'a') const;

 private:
  void check_ring(const CycElt& o) const;
  CycRing ring_;
  IntVec c_;
};

/// sigma_k: a -> a^k. Throws std::invalid_argument unless gcd(k, n) == 1.
CycElt conjugate(const CycElt& x, long long k);

/// Product of sigma_k(x) over k in [1, n) coprime to n.
Integer norm(const CycElt& x);
/// Product of sigma_k(x) over k in [2, n) coprime to n, so x * result = N(x).
CycElt cofactor(const CycElt& x);
/// Norm computed independently as Res(Phi_n, coefficient polynomial of x).
Integer norm_by_resultant(const CycElt& x);

/// Gaussian periods of length f = (lambda-1)/e for the least primitive root g:
/// eta_i = sum over j = i (mod e) of a^(g^j).
struct PeriodSystem {
  unsigned lambda = 0;
  unsigned e = 0;
  unsigned f = 0;
  u64 g = 0;
  std::vector<CycElt> periods;
  /// exponents[i] lists the powers g^j (mod lambda) summed in eta_i.
  std::vector<std::vector<u64>> exponents;

  /// c + sum_i coeffs[i] * eta_i.
  CycElt combination(const Integer& c, std::span<const Integer> coeffs) const;
  /// sigma_g^shift applied to c + sum coeffs[i] eta_i, i.e. eta_i -> eta_{i+shift}.
  CycElt rotated_combination(const Integer& c, std::span<const Integer> coeffs, unsigned shift) const;
};

/// Throws std::invalid_argument unless lambda is prime and e | lambda - 1.
PeriodSystem gaussian_periods(unsigned lambda, unsigned e);

/// Coefficients c_i with x = sum c_i eta_i when x lies in the period subring,
/// std::nullopt otherwise.
std::optional<IntVec> express_in_periods(const CycElt& x, const PeriodSystem& ps);

}  // namespace kummer
