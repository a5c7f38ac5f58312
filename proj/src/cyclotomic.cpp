#include "kummerlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kummerlab/errors.hpp"

namespace kummer {

struct CycRing::Data {
  unsigned n;
  std::size_t d;
  bool prime;
  PolyInt phi;
  MultTable table;
};

namespace {

// Reduces a coefficient vector (any length) modulo X^n - 1 and then Phi_n.
IntVec reduce(IntVec v, unsigned n, const PolyInt& phi, std::size_t d) {
  if (v.size() > n) {
    for (std::size_t i = n; i < v.size(); ++i) v[i % n] += v[i];
    v.resize(n);
  }
  if (v.size() > d) {
    if (phi.degree() + 1 == static_cast<int>(n)) {
      // Phi_n = 1 + X + ... + X^{n-1} (n prime): subtract top * Phi.
      const Integer top = v[n - 1];
      v.resize(d);
      if (top != 0)
        for (auto& c : v) c -= top;
    } else {
      v = divmod_monic(PolyInt(std::move(v)), phi).second.coeffs();
    }
  }
  v.resize(d, Integer(0));
  return v;
}

}  // namespace

CycRing CycRing::of(unsigned n) {
  if (n == 0) throw std::invalid_argument("CycRing: conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const Data>> interned;
  std::lock_guard lock(mu);
  if (auto it = interned.find(n); it != interned.end()) return CycRing(it->second);
  auto data = std::make_shared<Data>();
  data->n = n;
  data->phi = cyclotomic_polynomial(n);
  data->d = static_cast<std::size_t>(data->phi.degree());
  data->prime = is_prime(static_cast<u64>(n));
  data->table = MultTable(data->d);
  for (std::size_t i = 0; i < data->d; ++i) {
    for (std::size_t j = 0; j < data->d; ++j) {
      IntVec v(i + j + 1, Integer(0));
      v[i + j] = 1;
      IntVec r = reduce(std::move(v), n, data->phi, data->d);
      for (std::size_t k = 0; k < data->d; ++k) data->table(i, j, k) = r[k];
    }
  }
  interned.emplace(n, data);
  return CycRing(std::move(data));
}

unsigned CycRing::conductor() const { return data_->n; }
std::size_t CycRing::degree() const { return data_->d; }
bool CycRing::prime_conductor() const { return data_->prime; }
const PolyInt& CycRing::modulus() const { return data_->phi; }
const MultTable& CycRing::mult_table() const { return data_->table; }

CycElt CycRing::zero() const { return CycElt(*this, IntVec(degree(), Integer(0))); }
CycElt CycRing::one() const { return integer(1); }

CycElt CycRing::integer(const Integer& c) const {
  IntVec v(degree(), Integer(0));
  v[0] = c;
  return CycElt(*this, std::move(v));
}

CycElt CycRing::root() const { return root_power(1); }

CycElt CycRing::root_power(long long k) const {
  const long long n = data_->n;
  const long long e = ((k % n) + n) % n;
  IntVec v(static_cast<std::size_t>(e) + 1, Integer(0));
  v[static_cast<std::size_t>(e)] = 1;
  return CycElt(*this, reduce(std::move(v), data_->n, data_->phi, data_->d));
}

CycElt CycRing::from_coeffs(IntVec coeffs) const {
  return CycElt(*this, reduce(std::move(coeffs), data_->n, data_->phi, data_->d));
}

CycElt CycRing::from_poly(const PolyInt& f) const { return from_coeffs(f.coeffs()); }

CycElt::CycElt(CycRing ring, IntVec coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (c_.size() != ring_.degree()) throw std::invalid_argument("CycElt: coefficient count mismatch");
}

bool CycElt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycElt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Integer& CycElt::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycElt: element is not rational");
  return c_[0];
}

bool CycElt::divisible_by(const Integer& m) const {
  for (const auto& c : c_)
    if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) return false;
  return true;
}

CycElt CycElt::divexact(const Integer& m) const {
  IntVec v = c_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return CycElt(ring_, std::move(v));
}

void CycElt::check_ring(const CycElt& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("CycElt: operands from different rings");
}

CycElt& CycElt::operator+=(const CycElt& o) {
  check_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& o) {
  check_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycElt& CycElt::operator*=(const CycElt& o) {
  check_ring(o);
  const std::size_t d = c_.size();
  IntVec prod(2 * d - 1, Integer(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = ring_.from_coeffs(std::move(prod));
  return *this;
}

CycElt operator*(const Integer& s, CycElt a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

CycElt CycElt::operator-() const { return Integer(-1) * *this; }

CycElt CycElt::pow(unsigned e) const {
  CycElt result = ring_.one(), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycElt::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

CycElt conjugate(const CycElt& x, long long k) {
  const long long n = x.ring().conductor();
  const long long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1 && n != 1)
    throw std::invalid_argument("conjugate: exponent " + std::to_string(k) + " not coprime to " +
                                std::to_string(n));
  IntVec v(static_cast<std::size_t>(n), Integer(0));
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    v[static_cast<std::size_t>((static_cast<long long>(i) * kk) % n)] += x[i];
  return x.ring().from_coeffs(std::move(v));
}

CycElt cofactor(const CycElt& x) {
  const unsigned n = x.ring().conductor();
  CycElt acc = x.ring().one();
  for (unsigned k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) acc *= conjugate(x, k);
  return acc;
}

Integer norm(const CycElt& x) {
  const CycElt n = x * cofactor(x);
  if (!n.is_rational()) throw MathError("norm: product of conjugates is not rational");
  return n.rational_value();
}

Integer norm_by_resultant(const CycElt& x) {
  if (x.ring().degree() == 1) return x[0];
  return resultant(x.ring().modulus(), x.to_poly());
}

PeriodSystem gaussian_periods(unsigned lambda, unsigned e) {
  if (!is_prime(static_cast<u64>(lambda))) throw std::invalid_argument("gaussian_periods: lambda not prime");
  if (e == 0 || (lambda - 1) % e != 0)
    throw std::invalid_argument("gaussian_periods: e must divide lambda - 1");
  PeriodSystem ps;
  ps.lambda = lambda;
  ps.e = e;
  ps.f = (lambda - 1) / e;
  ps.g = least_primitive_root(lambda);
  const CycRing ring = CycRing::of(lambda);
  ps.exponents.assign(e, {});
  u64 power = 1;
  for (unsigned j = 0; j + 1 < lambda; ++j) {
    ps.exponents[j % e].push_back(power);
    power = power * ps.g % lambda;
  }
  for (unsigned i = 0; i < e; ++i) {
    CycElt eta = ring.zero();
    for (u64 k : ps.exponents[i]) eta += ring.root_power(static_cast<long long>(k));
    ps.periods.push_back(std::move(eta));
  }
  return ps;
}

CycElt PeriodSystem::combination(const Integer& c, std::span<const Integer> coeffs) const {
  return rotated_combination(c, coeffs, 0);
}

CycElt PeriodSystem::rotated_combination(const Integer& c, std::span<const Integer> coeffs,
                                         unsigned shift) const {
  if (coeffs.size() != e) throw std::invalid_argument("PeriodSystem: expected one coefficient per period");
  // Work in the basis a^1..a^{lambda-1}, where 1 = -(a + ... + a^{lambda-1}).
  IntVec full(lambda, Integer(0));
  for (unsigned i = 0; i < e; ++i) {
    const Integer& ci = coeffs[i];
    if (ci == 0) continue;
    for (u64 k : exponents[(i + shift) % e]) full[k] += ci;
  }
  full[0] += c;
  return CycRing::of(lambda).from_coeffs(std::move(full));
}

std::optional<IntVec> express_in_periods(const CycElt& x, const PeriodSystem& ps) {
  if (x.ring().conductor() != ps.lambda) throw std::invalid_argument("express_in_periods: ring mismatch");
  // b_k = coefficient of a^k in the basis a^1..a^{lambda-1}.
  auto b = [&](u64 k) -> Integer {
    const Integer ak = k < x.coeffs().size() ? x[k] : Integer(0);
    return ak - x[0];
  };
  IntVec out(ps.e);
  for (unsigned i = 0; i < ps.e; ++i) {
    out[i] = b(ps.exponents[i].front());
    for (u64 k : ps.exponents[i])
      if (b(k) != out[i]) return std::nullopt;
  }
  return out;
}

}  // namespace kummer
