#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kummerlab/integer.hpp"
#include "kummerlab/poly.hpp"

namespace kummer {

/// Dense polynomial over F_p, lowest degree first, coefficients in [0, p).
class PolyModP {
 public:
  PolyModP() = default;
  PolyModP(u64 p, std::vector<u64> coeffs);
  static PolyModP from_int(const PolyInt& f, u64 p);
  static PolyModP monomial(u64 p, u64 c, std::size_t degree);
  static PolyModP x(u64 p) { return monomial(p, 1, 1); }
  static PolyModP constant(u64 p, u64 c) { return monomial(p, c, 0); }

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }

  PolyModP monic() const;
  PolyModP derivative() const;
  u64 evaluate(u64 x) const;
  /// Coefficientwise lift to the integers, representatives in [0, p).
  PolyInt lift() const;

  PolyModP& operator+=(const PolyModP& o);
  PolyModP& operator-=(const PolyModP& o);
  friend PolyModP operator+(PolyModP a, const PolyModP& b) { return a += b; }
  friend PolyModP operator-(PolyModP a, const PolyModP& b) { return a -= b; }
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(u64 s, PolyModP a);
  friend bool operator==(const PolyModP& a, const PolyModP& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  /// Canonical order: degree first, then coefficients from the top down.
  friend bool canonical_less(const PolyModP& a, const PolyModP& b);

  std::string to_string(char var = 'X') const;

 private:
  void trim();
  u64 p_ = 2;
  std::vector<u64> c_;
};

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);
PolyModP gcd(PolyModP a, PolyModP b);
/// base^e reduced modulo m (e given as an arbitrary precision integer).
PolyModP powmod(const PolyModP& base, const Integer& e, const PolyModP& m);
PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m);

/// Rabin irreducibility test.
bool is_irreducible(const PolyModP& f);

struct ModFactor {
  PolyModP factor;  // monic irreducible
  int multiplicity;
};

/// Complete factorization into monic irreducibles: squarefree split,
/// distinct-degree split, then equal-degree splitting driven by a fixed
/// counter sequence of trial elements. Output sorted canonically.
/// Throws std::invalid_argument for a non-prime modulus or g == 0.
std::vector<ModFactor> factor_mod_p(const PolyModP& g);

}  // namespace kummer
