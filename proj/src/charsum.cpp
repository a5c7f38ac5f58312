#include "kummerlab/charsum.hpp"

#include <numeric>
#include <stdexcept>

#include "kummerlab/errors.hpp"
#include "kummerlab/valuation.hpp"

namespace kummer {

Character::Character(u64 p, unsigned lambda) : p_(p), lambda_(lambda), ring_(CycRing::of(lambda)) {
  if (!is_prime(p)) throw std::invalid_argument("character: p = " + std::to_string(p) + " is not prime");
  if (lambda < 2 || (p - 1) % lambda != 0)
    throw std::invalid_argument("character: order " + std::to_string(lambda) + " does not divide p - 1");
  g_ = least_primitive_root(p);
  log_.assign(p, 0);
  u64 x = 1;
  for (u64 a = 0; a + 1 < p; ++a) {
    log_[x] = a;
    x = mulmod(x, g_, p);
  }
}

u64 Character::index(u64 t) const {
  t %= p_;
  if (t == 0) throw std::invalid_argument("character: index of 0");
  return log_[t];
}

u64 Character::exponent(long long i, u64 t) const {
  const long long l = lambda_;
  const u64 ii = static_cast<u64>(((i % l) + l) % l);
  return (ii * (index(t) % lambda_)) % lambda_;
}

CycElt jacobi_psi(const Character& chi, long long i, long long k) {
  IntVec counts(chi.order(), Integer(0));
  const u64 p = chi.p();
  for (u64 t = 2; t < p; ++t) {
    const u64 e = (chi.exponent(i, t) + chi.exponent(k, p + 1 - t)) % chi.order();
    counts[e] += 1;
  }
  return chi.ring().from_poly(PolyInt(std::move(counts)));
}

CycElt jacobi_sum(const Character& chi, long long i, long long k) { return -jacobi_psi(chi, i, k); }

namespace {

bool zero_mod(long long v, long long n) { return ((v % n) + n) % n == 0; }

}  // namespace

ReflectionReport reflection_identity(const Character& chi, long long i, long long k) {
  const long long l = chi.order();
  if (zero_mod(i, l) || zero_mod(k, l) || zero_mod(i + k, l))
    throw MathError("degenerate index: i, k and i+k must be nonzero mod " + std::to_string(l));
  CycElt j = jacobi_sum(chi, i, k);
  CycElt prod = j * conjugate(j, -1);
  const bool holds = prod == chi.ring().integer(Integer(static_cast<unsigned long>(chi.p())));
  return {std::move(j), std::move(prod), holds};
}

GaussSumRing::GaussSumRing(unsigned lambda, u64 p) : lambda_(lambda), p_(p), base_(CycRing::of(lambda)) {
  if (!is_prime(p)) throw std::invalid_argument("gauss sum ring: p must be prime");
  if (lambda < 1) throw std::invalid_argument("gauss sum ring: lambda must be positive");
}

GaussSumRing::Elt GaussSumRing::reduce(const Matrix& cyclic) const {
  const std::size_t d = base_.degree();
  std::vector<IntVec> cols(p_, IntVec(d, Integer(0)));
  for (std::size_t c = 0; c < p_; ++c) {
    IntVec xs(lambda_, Integer(0));
    bool any = false;
    for (std::size_t r = 0; r < cyclic.size(); ++r)
      if (c < cyclic[r].size() && cyclic[r][c] != 0) {
        xs[r % lambda_] += cyclic[r][c];
        any = true;
      }
    if (any) cols[c] = base_.from_poly(PolyInt(std::move(xs))).coeffs();
  }
  // x^{p-1} = -(1 + x + ... + x^{p-2})
  Matrix out(d, IntVec(p_ - 1, Integer(0)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c + 1 < p_; ++c) out[r][c] = cols[c][r] - cols[p_ - 1][r];
  return Elt(this, std::move(out));
}

GaussSumRing::Elt GaussSumRing::embed(const CycElt& x) const {
  if (!(x.ring() == base_)) throw std::invalid_argument("gauss sum ring: element from another ring");
  Matrix m(base_.degree(), IntVec(p_ - 1, Integer(0)));
  for (std::size_t r = 0; r < base_.degree(); ++r) m[r][0] = x[r];
  return Elt(this, std::move(m));
}

GaussSumRing::Elt GaussSumRing::Elt::operator*(const Elt& o) const {
  const GaussSumRing& R = *ring_;
  const std::size_t l = R.lambda_, p = R.p_;
  Matrix cyc(l, IntVec(p, Integer(0)));
  for (std::size_t r1 = 0; r1 < m_.size(); ++r1)
    for (std::size_t c1 = 0; c1 < m_[r1].size(); ++c1) {
      if (m_[r1][c1] == 0) continue;
      for (std::size_t r2 = 0; r2 < o.m_.size(); ++r2)
        for (std::size_t c2 = 0; c2 < o.m_[r2].size(); ++c2) {
          if (o.m_[r2][c2] == 0) continue;
          cyc[(r1 + r2) % l][(c1 + c2) % p] += m_[r1][c1] * o.m_[r2][c2];
        }
    }
  return R.reduce(cyc);
}

GaussSumRing::Elt GaussSumRing::Elt::operator+(const Elt& o) const {
  Matrix m = m_;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] += o.m_[r][c];
  return Elt(ring_, std::move(m));
}

GaussSumRing::Elt GaussSumRing::Elt::operator-() const {
  Matrix m = m_;
  for (auto& row : m)
    for (auto& v : row) v = -v;
  return Elt(ring_, std::move(m));
}

GaussSumRing::Elt GaussSumRing::Elt::pow(unsigned e) const {
  Elt result = ring_->embed(ring_->base_.one());
  Elt base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

GaussSumRing::Elt GaussSumRing::Elt::substitute(u64 j) const {
  const std::size_t p = ring_->p_;
  if (j % p == 0) throw std::invalid_argument("gauss sum ring: substitution x -> x^0");
  Matrix cyc(ring_->lambda_, IntVec(p, Integer(0)));
  for (std::size_t r = 0; r < m_.size(); ++r)
    for (std::size_t c = 0; c < m_[r].size(); ++c) cyc[r][(c * j) % p] += m_[r][c];
  return ring_->reduce(cyc);
}

std::optional<CycElt> GaussSumRing::Elt::descend() const {
  IntVec col(m_.size());
  for (std::size_t r = 0; r < m_.size(); ++r) {
    for (std::size_t c = 1; c < m_[r].size(); ++c)
      if (m_[r][c] != 0) return std::nullopt;
    col[r] = m_[r][0];
  }
  return ring_->base_.from_coeffs(std::move(col));
}

GaussSumRing::Elt gauss_sum(const GaussSumRing& G, long long i) {
  const u64 p = G.p();
  const long long l = G.lambda();
  const u64 g = least_primitive_root(p);
  GaussSumRing::Matrix cyc(G.lambda(), IntVec(p, Integer(0)));
  u64 x = 1;
  const long long ii = ((i % l) + l) % l;
  for (u64 j = 0; j + 1 < p; ++j) {
    cyc[static_cast<std::size_t>((ii * static_cast<long long>(j % G.lambda())) % l)][x] += 1;
    x = mulmod(x, g, p);
  }
  return G.reduce(cyc);
}

GaussJacobiReport gauss_jacobi_relation(const Character& chi, long long i, long long k) {
  const long long l = chi.order();
  if (zero_mod(i, l) || zero_mod(k, l) || zero_mod(i + k, l))
    throw MathError("degenerate index: i, k and i+k must be nonzero mod " + std::to_string(l));
  GaussSumRing G(chi.order(), chi.p());
  CycElt psi = jacobi_psi(chi, i, k);
  const bool ok = gauss_sum(G, i) * gauss_sum(G, k) == G.embed(psi) * gauss_sum(G, i + k);
  return {ok, psi, -psi};
}

DescentReport gauss_power_descent(const GaussSumRing& G, long long i) {
  const long long l = G.lambda();
  if (zero_mod(i, l)) throw MathError("degenerate index: i must be nonzero mod " + std::to_string(l));
  const GaussSumRing::Elt v = gauss_sum(G, i).pow(G.lambda());
  bool invariant = true;
  for (u64 j = 1; j < G.p(); ++j)
    if (!(v.substitute(j) == v)) {
      invariant = false;
      break;
    }
  auto down = v.descend();
  if (!invariant || !down) throw MathError("gauss_power_descent: power depends on x");
  DescentReport rep{*down, invariant, G.base().zero(), false};
  if (std::gcd(static_cast<long long>(((i % l) + l) % l), l) == 1) {
    const Character chi(G.p(), G.lambda());
    CycElt e = G.base().root_power(static_cast<long long>(chi.exponent(i, G.p() - 1)));
    e = Integer(static_cast<unsigned long>(G.p())) * e;
    for (long long j = 1; j <= l - 2; ++j) e *= jacobi_psi(chi, i, i * j);
    rep.matches_jacobi = e == rep.value;
    rep.jacobi_expression = std::move(e);
  }
  return rep;
}

FcReport fc_check(u64 p, long long i, long long k) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("fc_check: p must be an odd prime");
  const long long n = static_cast<long long>(p - 1);
  if (i <= 0 || k <= 0 || i >= n || k >= n)
    throw std::invalid_argument("fc_check: indices must satisfy 0 < i, k < p - 1");
  if (i + k == n) throw MathError("excluded index: i + k = p - 1");
  const Character chi(p, static_cast<unsigned>(p - 1));
  const CycElt psi = jacobi_psi(chi, i, k);
  FcReport r;
  r.p = p;
  r.i = i;
  r.k = k;
  r.g = chi.generator();
  u64 acc = 0;
  for (std::size_t e = psi.coeffs().size(); e-- > 0;)
    acc = (mulmod(acc, r.g, p) + mod_u64(psi[e], p)) % p;
  r.psi_residue = acc;
  r.j_residue = (p - acc) % p;
  if (i + k > n) {
    const auto a = static_cast<unsigned long>(n - i), b = static_cast<unsigned long>(n - k);
    r.binomial_quotient = factorial(a + b) / (factorial(a) * factorial(b));
    r.expected = mod_u64(r.binomial_quotient, p);
  }
  r.holds = r.j_residue == r.expected;
  r.holds_for_psi = r.psi_residue == r.expected;
  return r;
}

std::vector<FcReport> fc_check_all(u64 p) {
  std::vector<FcReport> out;
  const long long n = static_cast<long long>(p - 1);
  for (long long i = 1; i < n; ++i)
    for (long long k = 1; k < n; ++k)
      if (i + k != n) out.push_back(fc_check(p, i, k));
  return out;
}

QuarticReport quartic_demo(u64 p) {
  if (!is_prime(p) || p % 4 != 1) throw std::invalid_argument("quartic: p must be a prime = 1 mod 4");
  const Character chi(p, 4);
  const CycElt j = jacobi_sum(chi, 1, 1);
  QuarticReport r;
  r.p = p;
  r.a = j[0];
  r.b = j[1];
  r.norm_ok = r.a * r.a + r.b * r.b == Integer(static_cast<unsigned long>(p));
  r.odd_part = mpz_odd_p(r.a.get_mpz_t()) ? r.a : r.b;
  const unsigned long m = (p - 1) / 4;
  r.half_binomial = mulmod(mod_u64(binomial(2 * m, m), p), invmod(2, p), p);
  const u64 odd = mod_u64(r.odd_part, p);
  r.congruence_ok = odd == r.half_binomial || (odd + r.half_binomial) % p == 0;
  return r;
}

BinomialReport binomial_congruence(u64 p) {
  if (!is_prime(p) || p % 4 != 1) throw std::invalid_argument("binomial: p must be a prime = 1 mod 4");
  BinomialReport r;
  r.p = p;
  for (u64 b = 1; 4 * b * b < p; ++b) {
    const Integer rest(static_cast<unsigned long>(p - 4 * b * b));
    const Integer a = sqrt(rest);
    if (a * a == rest) {
      r.a = a;
      r.b = Integer(static_cast<unsigned long>(b));
      break;
    }
  }
  const unsigned long n = (p - 1) / 4;
  r.binomial_residue = mod_u64(binomial(2 * n, n), p);
  const u64 two_a = mod_u64(2 * r.a, p);
  r.holds = r.a != 0 && (two_a == r.binomial_residue || (two_a + r.binomial_residue) % p == 0);
  return r;
}

namespace {

void require_stickelberger(unsigned lambda, u64 p) {
  if (lambda < 3 || !is_prime(static_cast<u64>(lambda)))
    throw std::invalid_argument("stickelberger: lambda must be an odd prime");
  if (!is_prime(p) || p % lambda != 1)
    throw std::invalid_argument("stickelberger: p must be a prime = 1 mod lambda");
}

/// Maps with xi = (g^m)^t for t = 1..lambda-1.
std::vector<JacobiMap> maps_by_power(unsigned lambda, u64 p, u64 xi) {
  const auto maps = enumerate_jacobi_maps(lambda, p);
  std::vector<JacobiMap> out;
  for (unsigned t = 1; t < lambda; ++t) {
    const u64 target = powmod(xi, t, p);
    bool found = false;
    for (const auto& m : maps)
      if (m.xi.prime_field_value() == target) {
        out.push_back(m);
        found = true;
        break;
      }
    if (!found) throw MathError("stickelberger: no map with xi = " + std::to_string(target));
  }
  return out;
}

}  // namespace

StickelbergerReport stickelberger_check(unsigned lambda, u64 p) {
  require_stickelberger(lambda, p);
  const Character chi(p, lambda);
  StickelbergerReport r{lambda, p, powmod(chi.generator(), chi.m(), p), jacobi_sum(chi, 1, 1), {}, 0, true};
  const auto maps = maps_by_power(lambda, p, r.xi);
  for (unsigned t = 1; t < lambda; ++t) {
    const JacobiMap& map = maps[t - 1];
    StickelbergerEntry e;
    e.t = t;
    e.map_label = map.label();
    e.kummer = multiplicity(r.j, make_kummer_prime(map));
    e.oracle = valuation_oracle(r.j, map);
    const u64 tm = t * chi.m();
    u64 acc = 0;
    for (u64 x = 2; x < p; ++x) acc = (acc + powmod(mulmod(x, p + 1 - x, p), tm, p)) % p;
    e.fc_divisible = acc == 0;
    e.expected = 2 * t < lambda;
    const int want = e.expected ? 1 : 0;
    if (e.kummer != want || e.oracle != want || e.fc_divisible != e.expected) r.holds = false;
    r.total += e.kummer;
    r.entries.push_back(std::move(e));
  }
  if (r.total != static_cast<int>((lambda - 1) / 2)) r.holds = false;
  return r;
}

DescentValuationReport descent_valuations(unsigned lambda, u64 p) {
  require_stickelberger(lambda, p);
  const Character chi(p, lambda);
  const GaussSumRing G(lambda, p);
  const CycElt d1 = gauss_power_descent(G, 1).value;
  const CycElt d2 = gauss_power_descent(G, 2).value;
  const CycElt j = jacobi_sum(chi, 1, 1);
  const auto maps = maps_by_power(lambda, p, powmod(chi.generator(), chi.m(), p));
  DescentValuationReport r;
  r.consistent = true;
  for (const auto& map : maps) {
    const KummerPrime k = make_kummer_prime(map);
    r.gauss_power.push_back(multiplicity(d1, k));
    r.gauss_power_sq.push_back(multiplicity(d2, k));
    r.jacobi.push_back(multiplicity(j, k));
    if (static_cast<int>(lambda) * r.jacobi.back() != 2 * r.gauss_power.back() - r.gauss_power_sq.back())
      r.consistent = false;
  }
  return r;
}

}  // namespace kummer
