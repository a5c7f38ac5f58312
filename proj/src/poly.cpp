#include "kummerlab/poly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace kummer {

PolyInt::PolyInt(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyInt PolyInt::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return PolyInt(std::move(v));
}

void PolyInt::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer PolyInt::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyInt& PolyInt::operator+=(const PolyInt& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyInt& PolyInt::operator-=(const PolyInt& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyInt operator*(const PolyInt& a, const PolyInt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyInt(std::move(r));
}

PolyInt operator*(const Integer& s, PolyInt a) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

PolyInt PolyInt::operator-() const { return Integer(-1) * *this; }

std::string PolyInt::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
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
  return os.str();
}

std::pair<PolyInt, PolyInt> divmod_monic(const PolyInt& a, const PolyInt& m) {
  if (m.is_zero() || m.leading() != 1) throw std::invalid_argument("divmod_monic: divisor not monic");
  std::vector<Integer> r = a.coeffs();
  const int dm = m.degree();
  if (a.degree() < dm) return {PolyInt{}, a};
  std::vector<Integer> q(a.degree() - dm + 1, Integer(0));
  for (int i = a.degree(); i >= dm; --i) {
    const Integer t = r[i];
    if (t == 0) continue;
    q[i - dm] = t;
    for (int j = 0; j <= dm; ++j) r[i - dm + j] -= t * m.coeffs()[j];
  }
  r.resize(dm);
  return {PolyInt(std::move(q)), PolyInt(std::move(r))};
}

PolyInt cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static thread_local std::map<unsigned, PolyInt> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  PolyInt p = PolyInt::monomial(1, n) - PolyInt::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divmod_monic(p, cyclotomic_polynomial(d)).first;
  }
  cache.emplace(n, p);
  return p;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const PolyInt& a, const PolyInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int da = a.degree(), db = b.degree();
  if (da == 0 && db == 0) return 1;
  const int n = da + db;
  std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n, Integer(0)));
  // Rows hold coefficients from the leading term down.
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) s[r][r + i] = a.coeffs()[da - i];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) s[db + r][r + i] = b.coeffs()[db - i];
  return determinant(std::move(s));
}

}  // namespace kummer
