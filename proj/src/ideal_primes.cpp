#include "kummerlab/ideal_primes.hpp"

#include <stdexcept>

namespace kummer {

std::string JacobiMap::label() const {
  if (f == 1) return xi.to_string();
  return factor.to_string('X');
}

std::vector<JacobiMap> enumerate_jacobi_maps(unsigned lambda, u64 p) {
  if (!is_prime(static_cast<u64>(lambda))) throw std::invalid_argument("enumerate_jacobi_maps: lambda not prime");
  if (!is_prime(p)) throw std::invalid_argument("enumerate_jacobi_maps: p not prime");
  const PolyModP phi = PolyModP::from_int(cyclotomic_polynomial(lambda), p);
  std::vector<JacobiMap> maps;
  FieldPtr prime_field;
  for (const auto& [factor, mult] : factor_mod_p(phi)) {
    JacobiMap m;
    m.lambda = lambda;
    m.p = p;
    m.f = static_cast<unsigned>(factor.degree());
    m.factor = factor;
    if (m.f == 1) {
      if (!prime_field) prime_field = FiniteField::prime_field(p);
      m.field = prime_field;
      m.xi = FFElement::constant(prime_field, (p - factor[0]) % p);
    } else {
      m.field = FiniteField::create(factor);
      m.xi = FFElement::generator(m.field);
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

FFElement apply(const JacobiMap& map, const CycElt& x) {
  if (x.ring().conductor() != map.lambda)
    throw std::invalid_argument("apply: element ring does not match the map");
  FFElement acc = FFElement::constant(map.field, 0);
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= map.xi;
    acc += FFElement::constant(map.field, mod_u64(c[i], map.p));
  }
  return acc;
}

std::vector<u64> period_residues(const JacobiMap& map, const PeriodSystem& periods) {
  if (periods.lambda != map.lambda) throw std::invalid_argument("period_residues: lambda mismatch");
  if (periods.f != map.f)
    throw std::invalid_argument("period_residues: period length " + std::to_string(periods.f) +
                                " does not match residue degree " + std::to_string(map.f));
  std::vector<u64> u;
  for (const auto& eta : periods.periods) u.push_back(apply(map, eta).prime_field_value());
  return u;
}

JacobiMap precompose_conjugation(const JacobiMap& map, long long k) {
  const long long l = map.lambda;
  const long long kk = ((k % l) + l) % l;
  if (kk == 0) throw std::invalid_argument("precompose_conjugation: k divisible by lambda");
  JacobiMap out = map;
  out.xi = map.xi.pow(Integer(static_cast<long>(kk)));
  if (out.f == 1) out.factor = PolyModP(map.p, {(map.p - out.xi.prime_field_value()) % map.p, 1});
  return out;
}

std::size_t canonical_position(const std::vector<JacobiMap>& canonical, const JacobiMap& map) {
  const IntLattice target = kernel(map).lattice;
  for (std::size_t i = 0; i < canonical.size(); ++i)
    if (kernel(canonical[i]).lattice == target) return i;
  throw std::invalid_argument("canonical_position: no map with the same kernel");
}

IdealPrimeKernel kernel(const JacobiMap& map) {
  // Rows (image of a^i in F_p^f | e_i) and (p e_j | 0); the span with
  // vanishing image block is the kernel.
  const CycRing ring = CycRing::of(map.lambda);
  const std::size_t d = ring.degree();
  const std::size_t f = map.f;
  IntMatrix m(d + f, f + d);
  FFElement power = FFElement::constant(map.field, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < f; ++j) m(i, j) = static_cast<unsigned long>(power.residue()[j]);
    m(i, f + i) = 1;
    power *= map.xi;
  }
  for (std::size_t j = 0; j < f; ++j) m(d + j, j) = static_cast<unsigned long>(map.p);
  const IntMatrix h = hermite_rows(m);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool image_zero = true;
    for (std::size_t j = 0; j < f && image_zero; ++j) image_zero = h(i, j) == 0;
    if (!image_zero) continue;
    IntVec r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = h(i, f + k);
    rows.push_back(std::move(r));
  }
  return {map, hnf(rows, d)};
}

IntLattice conjugate_lattice(const IntLattice& l, unsigned lambda, long long k) {
  const CycRing ring = CycRing::of(lambda);
  std::vector<IntVec> rows;
  for (auto& r : l.basis().to_rows()) rows.push_back(conjugate(ring.from_coeffs(r), k).coeffs());
  return hnf(rows, ring.degree());
}

}  // namespace kummer
