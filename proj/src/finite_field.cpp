#include "kummerlab/finite_field.hpp"

#include <stdexcept>

namespace kummer {

std::shared_ptr<const FiniteField> FiniteField::create(const PolyModP& defining) {
  if (!is_prime(defining.modulus())) throw std::invalid_argument("FiniteField: characteristic not prime");
  if (defining.degree() < 1 || !is_irreducible(defining))
    throw std::invalid_argument("FiniteField: defining polynomial not irreducible");
  return std::shared_ptr<const FiniteField>(new FiniteField(defining.monic()));
}

std::shared_ptr<const FiniteField> FiniteField::prime_field(u64 p) {
  return create(PolyModP::x(p));
}

Integer FiniteField::order() const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), characteristic(), static_cast<unsigned long>(degree()));
  return r;
}

FFElement::FFElement(FieldPtr field, const PolyModP& residue)
    : field_(std::move(field)), r_(residue % field_->defining_polynomial()) {
  if (residue.modulus() != field_->characteristic())
    throw std::invalid_argument("FFElement: characteristic mismatch");
}

FFElement FFElement::constant(FieldPtr field, u64 c) {
  const u64 p = field->characteristic();
  return FFElement(field, PolyModP::constant(p, c % p));
}

FFElement FFElement::generator(FieldPtr field) {
  const u64 p = field->characteristic();
  return FFElement(field, PolyModP::x(p));
}

u64 FFElement::prime_field_value() const {
  if (!in_prime_field()) throw std::domain_error("FFElement: not in the prime field");
  return r_[0];
}

void FFElement::check_same(const FFElement& o) const {
  if (field_ != o.field_ && !(field_->defining_polynomial() == o.field_->defining_polynomial()))
    throw std::invalid_argument("FFElement: operands live in different fields");
}

FFElement& FFElement::operator+=(const FFElement& o) {
  check_same(o);
  r_ += o.r_;
  return *this;
}

FFElement& FFElement::operator-=(const FFElement& o) {
  check_same(o);
  r_ -= o.r_;
  return *this;
}

FFElement& FFElement::operator*=(const FFElement& o) {
  check_same(o);
  r_ = mulmod(r_, o.r_, field_->defining_polynomial());
  return *this;
}

FFElement FFElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  return FFElement(field_, powmod(r_, e, field_->defining_polynomial()));
}

FFElement FFElement::inverse() const {
  if (is_zero()) throw std::domain_error("FFElement: zero has no inverse");
  return pow(field_->order() - 2);
}

bool operator==(const FFElement& a, const FFElement& b) {
  if (a.r_ != b.r_) return false;
  return a.field_ == b.field_ ||
         a.field_->defining_polynomial() == b.field_->defining_polynomial();
}

bool operator<(const FFElement& a, const FFElement& b) {
  const auto& x = a.r_.coeffs();
  const auto& y = b.r_.coeffs();
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = n; i-- > 0;) {
    const u64 xi = i < x.size() ? x[i] : 0, yi = i < y.size() ? y[i] : 0;
    if (xi != yi) return xi < yi;
  }
  return false;
}

std::string FFElement::to_string() const {
  if (in_prime_field()) return std::to_string(r_[0]);
  return r_.to_string('X');
}

}  // namespace kummer
