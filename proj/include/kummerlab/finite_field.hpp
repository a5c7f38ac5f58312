#pragma once

#include <memory>
#include <string>

#include "kummerlab/poly_mod.hpp"

namespace kummer {

class FFElement;

/// F_{p^f} presented as F_p[X]/(m) for a monic irreducible m of degree f.
class FiniteField {
 public:
  /// Throws std::invalid_argument when p is not prime or m is reducible.
  static std::shared_ptr<const FiniteField> create(const PolyModP& defining);
  static std::shared_ptr<const FiniteField> prime_field(u64 p);

  u64 characteristic() const { return defining_.modulus(); }
  int degree() const { return defining_.degree(); }
  const PolyModP& defining_polynomial() const { return defining_; }
  Integer order() const;

 private:
  explicit FiniteField(PolyModP defining) : defining_(std::move(defining)) {}
  PolyModP defining_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

class FFElement {
 public:
  FFElement() = default;
  FFElement(FieldPtr field, const PolyModP& residue);
  static FFElement constant(FieldPtr field, u64 c);
  /// Class of X in F_p[X]/(m).
  static FFElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const PolyModP& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }
  bool in_prime_field() const { return r_.degree() <= 0; }
  /// Value in [0, p); requires in_prime_field().
  u64 prime_field_value() const;

  FFElement& operator+=(const FFElement& o);
  FFElement& operator-=(const FFElement& o);
  FFElement& operator*=(const FFElement& o);
  friend FFElement operator+(FFElement a, const FFElement& b) { return a += b; }
  friend FFElement operator-(FFElement a, const FFElement& b) { return a -= b; }
  friend FFElement operator*(FFElement a, const FFElement& b) { return a *= b; }
  FFElement pow(const Integer& e) const;
  /// Throws std::domain_error for zero.
  FFElement inverse() const;

  friend bool operator==(const FFElement& a, const FFElement& b);
  /// Fixed total order: lexicographic on the residue polynomial.
  friend bool operator<(const FFElement& a, const FFElement& b);

  std::string to_string() const;

 private:
  void check_same(const FFElement& o) const;
  FieldPtr field_;
  PolyModP r_;
};

}  // namespace kummer
