#include "kummerlab/poly_mod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kummer {

PolyModP::PolyModP(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

PolyModP PolyModP::from_int(const PolyInt& f, u64 p) {
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_u64(a, p));
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::monomial(u64 p, u64 c, std::size_t degree) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = c % p;
  return PolyModP(p, std::move(v));
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::monic() const {
  if (c_.empty()) return *this;
  const u64 inv = invmod(c_.back(), p_);
  return inv * *this;
}

PolyModP PolyModP::derivative() const {
  std::vector<u64> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
  return PolyModP(p_, std::move(d));
}

u64 PolyModP::evaluate(u64 x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

PolyInt PolyModP::lift() const {
  std::vector<Integer> v;
  for (u64 c : c_) v.emplace_back(static_cast<unsigned long>(c));
  return PolyInt(std::move(v));
}

PolyModP& PolyModP::operator+=(const PolyModP& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p_) c_[i] -= p_;
  }
  trim();
  return *this;
}

PolyModP& PolyModP::operator-=(const PolyModP& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p_, {});
  std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return PolyModP(a.p_, std::move(r));
}

PolyModP operator*(u64 s, PolyModP a) {
  for (auto& c : a.c_) c = mulmod(c, s % a.p_, a.p_);
  a.trim();
  return a;
}

bool canonical_less(const PolyModP& a, const PolyModP& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string PolyModP::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw std::domain_error("PolyModP division by zero");
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {PolyModP(p, {}), a};
  std::vector<u64> r = a.coeffs();
  std::vector<u64> q(a.degree() - b.degree() + 1, 0);
  const u64 inv = invmod(b.leading(), p);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const u64 t = mulmod(r[i], inv, p);
    q[i - db] = t;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = (r[i - db + j] + p - mulmod(t, b.coeffs()[j], p)) % p;
  }
  r.resize(db);
  return {PolyModP(p, std::move(q)), PolyModP(p, std::move(r))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m) { return (a * b) % m; }

PolyModP powmod(const PolyModP& base, const Integer& e, const PolyModP& m) {
  PolyModP result = PolyModP::constant(m.modulus(), 1) % m;
  PolyModP b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

namespace {

Integer pow_int(u64 p, unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

// X^(p^k) mod f.
PolyModP frobenius_power(const PolyModP& f, unsigned k) {
  return powmod(PolyModP::x(f.modulus()), pow_int(f.modulus(), k), f);
}

// Squarefree decomposition of a monic polynomial: list of (squarefree, multiplicity).
std::vector<std::pair<PolyModP, int>> squarefree(const PolyModP& f) {
  const u64 p = f.modulus();
  std::vector<std::pair<PolyModP, int>> out;
  if (f.degree() < 1) return out;
  PolyModP c = gcd(f, f.derivative());
  PolyModP w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    PolyModP y = gcd(w, c);
    PolyModP z = divmod(w, y).first;
    if (!z.is_one()) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (!c.is_one()) {
    // c is a p-th power: take the p-th root coefficientwise.
    std::vector<u64> root;
    for (int j = 0; j <= c.degree(); j += static_cast<int>(p)) root.push_back(c[j]);
    for (auto& [g, m] : squarefree(PolyModP(p, root).monic()))
      out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<PolyModP, int>> distinct_degree(PolyModP f) {
  const u64 p = f.modulus();
  std::vector<std::pair<PolyModP, int>> out;
  PolyModP h = PolyModP::x(p);
  const PolyModP x = PolyModP::x(p);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
    PolyModP g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// Trial element number k: digits of k in base p give the coefficients.
PolyModP counter_element(u64 p, u64 k, int max_degree) {
  std::vector<u64> c;
  while (k && static_cast<int>(c.size()) < max_degree) {
    c.push_back(k % p);
    k /= p;
  }
  return PolyModP(p, std::move(c));
}

// Equal-degree splitting of f (monic, squarefree, all factors of degree d).
void equal_degree(const PolyModP& f, int d, std::vector<PolyModP>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const u64 p = f.modulus();
  for (u64 k = 2;; ++k) {
    PolyModP r = counter_element(p, k, f.degree());
    if (r.degree() < 1) continue;
    PolyModP t;
    if (p == 2) {
      // Trace map r + r^2 + ... + r^(2^(d-1)).
      PolyModP s = r % f;
      t = s;
      for (int i = 1; i < d; ++i) {
        s = mulmod(s, s, f);
        t += s;
      }
    } else {
      Integer e = (pow_int(p, d) - 1) / 2;
      t = powmod(r, e, f) - PolyModP::constant(p, 1);
    }
    PolyModP g = gcd(f, t);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, out);
      equal_degree(divmod(f, g).first, d, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const PolyModP& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const PolyModP m = f.monic();
  const PolyModP x = PolyModP::x(f.modulus());
  for (auto [q, e] : factor_u64(static_cast<u64>(n))) {
    PolyModP h = frobenius_power(m, static_cast<unsigned>(n / q));
    if (!gcd(m, h - x).is_one()) return false;
  }
  return (frobenius_power(m, static_cast<unsigned>(n)) - x) % m == PolyModP(f.modulus(), {});
}

std::vector<ModFactor> factor_mod_p(const PolyModP& g) {
  if (!is_prime(g.modulus())) throw std::invalid_argument("factor_mod_p: modulus not prime");
  if (g.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
  std::vector<ModFactor> out;
  for (auto& [sf, mult] : squarefree(g.monic())) {
    for (auto& [block, d] : distinct_degree(sf)) {
      std::vector<PolyModP> pieces;
      equal_degree(block, d, pieces);
      for (auto& piece : pieces) out.push_back({piece, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (canonical_less(a.factor, b.factor)) return true;
    if (canonical_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace kummer
