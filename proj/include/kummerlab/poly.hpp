#pragma once

#include <string>
#include <vector>

#include "kummerlab/integer.hpp"

namespace kummer {

/// Dense polynomial over the integers, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
class PolyInt {
 public:
  PolyInt() = default;
  explicit PolyInt(std::vector<Integer> coeffs);
  static PolyInt monomial(const Integer& c, std::size_t degree);
  static PolyInt constant(const Integer& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  /// Coefficient of X^i (zero past the degree).
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }

  Integer evaluate(const Integer& x) const;

  PolyInt& operator+=(const PolyInt& o);
  PolyInt& operator-=(const PolyInt& o);
  friend PolyInt operator+(PolyInt a, const PolyInt& b) { return a += b; }
  friend PolyInt operator-(PolyInt a, const PolyInt& b) { return a -= b; }
  friend PolyInt operator*(const PolyInt& a, const PolyInt& b);
  friend PolyInt operator*(const Integer& s, PolyInt a);
  PolyInt operator-() const;
  friend bool operator==(const PolyInt& a, const PolyInt& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'X') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Quotient and remainder of a by the monic polynomial m.
std::pair<PolyInt, PolyInt> divmod_monic(const PolyInt& a, const PolyInt& m);

/// The n-th cyclotomic polynomial, monic of degree euler_phi(n).
PolyInt cyclotomic_polynomial(unsigned n);

/// Resultant of a and b via fraction-free elimination of the Sylvester matrix.
Integer resultant(const PolyInt& a, const PolyInt& b);

/// Determinant of a square integer matrix (row-major), Bareiss elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace kummer
