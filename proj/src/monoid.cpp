#include "kummerlab/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kummerlab/errors.hpp"

namespace kummer {

ResidueMonoid::ResidueMonoid(u64 m, std::vector<u64> residues, bool hilbert)
    : m_(m), residues_(std::move(residues)), member_(m, false), hilbert_(hilbert) {
  for (u64 r : residues_) member_[r] = true;
}

ResidueMonoid ResidueMonoid::hilbert(u64 m, std::vector<u64> subgroup) {
  if (m < 2) throw std::invalid_argument("monoid: modulus must exceed 1");
  for (u64& h : subgroup) {
    h %= m;
    if (std::gcd(h, m) != 1)
      throw std::invalid_argument("monoid: " + std::to_string(h) + " is not a unit mod " + std::to_string(m));
  }
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (subgroup.empty() || subgroup.front() != 1 % m) throw std::invalid_argument("monoid: subgroup must contain 1");
  for (u64 a : subgroup)
    for (u64 b : subgroup)
      if (!std::binary_search(subgroup.begin(), subgroup.end(), mulmod(a, b, m)))
        throw std::invalid_argument("monoid: residue set is not closed under multiplication");
  return ResidueMonoid(m, std::move(subgroup), true);
}

ResidueMonoid ResidueMonoid::singular() { return ResidueMonoid(4, {0, 1, 2}, false); }

bool ResidueMonoid::contains(u64 a) const { return a >= 1 && member_[a % m_]; }

bool ResidueMonoid::contains(const Integer& a) const { return a >= 1 && member_[mod_u64(a, m_)]; }

std::string ResidueMonoid::describe() const {
  std::ostringstream os;
  os << (hilbert_ ? "M(m=" : "N(m=") << m_ << ", residues {";
  for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << residues_[i];
  os << "})";
  return os.str();
}

namespace {

std::vector<u64> divisors(u64 a) {
  std::vector<u64> ds{1};
  for (auto [p, e] : factor_u64(a)) {
    const std::size_t n = ds.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

void require_member(const ResidueMonoid& M, u64 a) {
  if (!M.contains(a)) throw std::invalid_argument(std::to_string(a) + " is not in " + M.describe());
}

void require_coprime(const ResidueMonoid& M, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (M.is_hilbert() && M.modulus() % p == 0)
    throw MathError("outside theory: " + std::to_string(p) + " divides the modulus");
}

}  // namespace

bool is_irreducible(const ResidueMonoid& M, u64 a) {
  if (!M.contains(a) || a == 1) return false;
  for (u64 d : divisors(a))
    if (d > 1 && d < a && M.contains(d) && M.contains(a / d)) return false;
  return true;
}

std::vector<std::vector<u64>> factor_into_irreducibles(const ResidueMonoid& M, u64 a, bool all, u64 cap) {
  require_member(M, a);
  const std::vector<u64> ds = divisors(a);
  std::vector<u64> irr;
  u64 checks = 0;
  for (u64 d : ds) {
    if (++checks > cap) throw BoundExceeded("factor: divisor enumeration cap reached", static_cast<long long>(cap));
    if (is_irreducible(M, d)) irr.push_back(d);
  }
  std::vector<std::vector<u64>> out;
  std::vector<u64> current;
  std::function<void(u64, std::size_t)> rec = [&](u64 rest, std::size_t from) {
    if (!all && !out.empty()) return;
    if (rest == 1) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < irr.size() && irr[i] <= rest; ++i) {
      if (++checks > cap) throw BoundExceeded("factor: divisor enumeration cap reached", static_cast<long long>(cap));
      if (rest % irr[i] != 0 || !M.contains(rest / irr[i])) continue;
      current.push_back(irr[i]);
      rec(rest / irr[i], i);
      current.pop_back();
    }
  };
  rec(a, 0);
  return out;
}

std::vector<MonoidIdealPrime> ideal_factorization(const ResidueMonoid& M, u64 a) {
  require_member(M, a);
  if (std::gcd(a, M.modulus()) != 1) throw MathError("outside theory: gcd(a, m) > 1");
  std::vector<MonoidIdealPrime> out;
  u64 cls = 1 % M.modulus();
  for (auto [p, e] : factor_u64(a)) {
    const u64 c = p % M.modulus();
    out.push_back({p, e, c, M.contains_residue(c)});
    cls = mulmod(cls, powmod(c, static_cast<u64>(e), M.modulus()), M.modulus());
  }
  if (!M.contains_residue(cls)) throw MathError("ideal_factorization: class product not in H");
  return out;
}

DefinedAt defined_at(const ResidueMonoid& M, u64 p, const Integer& a, const Integer& b, u64 cap) {
  if (a < 1 || b < 1) throw std::invalid_argument("defined_at: a and b must be positive");
  require_coprime(M, p);
  const u64 m = M.modulus();
  if (m * p > cap) throw BoundExceeded("defined_at: residue enumeration cap reached", static_cast<long long>(cap));
  const Integer g = gcd(a, b);
  const Integer a0 = a / g, b0 = b / g;
  const u64 ar = mod_u64(a0, m), br = mod_u64(b0, m), bp = mod_u64(b0, p);
  auto search = [&](u64 num_r, u64 den_r, u64 den_p) -> std::optional<u64> {
    if (den_p == 0) return std::nullopt;
    for (u64 s = 1; s <= m * p; ++s)
      if (s % p != 0 && M.contains_residue(mulmod(num_r, s, m)) && M.contains_residue(mulmod(den_r, s, m)))
        return s;
    return std::nullopt;
  };
  DefinedAt r;
  if (auto s = search(ar, br, bp)) {
    r.defined = true;
    r.value = mulmod(mod_u64(a0, p), invmod(bp, p), p);
    r.witness_num = a0 * *s;
    r.witness_den = b0 * *s;
    return r;
  }
  const u64 ap = mod_u64(a0, p);
  if (search(br, ar, ap) && mod_u64(b0, p) == 0) r.infinite = true;
  return r;
}

u64 uniformizer(const ResidueMonoid& M, u64 p) {
  if (!M.is_hilbert()) throw std::invalid_argument("uniformizer: Hilbert monoids only");
  require_coprime(M, p);
  const u64 m = M.modulus();
  if (M.contains_residue(p % m)) return p;
  const u64 inv = invmod(p % m, m);
  for (u64 r = inv == 0 ? m : inv;; r += m)
    if (r % p != 0) return p * r;
}

bool is_uniformizer(const ResidueMonoid& M, u64 p, u64 q) {
  return M.contains(q) && q % p == 0 && (q / p) % p != 0;
}

int multiplicity_monoid(const ResidueMonoid& M, u64 p, const Integer& a, u64 q, u64 cap) {
  if (!M.contains(a)) throw std::invalid_argument("multiplicity: element not in the monoid");
  if (!is_uniformizer(M, p, q)) throw std::invalid_argument("multiplicity: not a uniformizer");
  int mu = 0;
  Integer qm = q;
  while (defined_at(M, p, a, qm, cap).defined) {
    ++mu;
    qm *= q;
    if (mu > 4096) throw MathError("multiplicity: runaway");
  }
  return mu;
}

std::string ClassGroup::structure() const {
  if (invariant_factors.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) os << (i ? " x " : "") << "C" << invariant_factors[i];
  return os.str();
}

ClassGroup class_group(const ResidueMonoid& M, u64 prime_cap) {
  if (!M.is_hilbert()) throw std::invalid_argument("class_group: Hilbert monoids only");
  const u64 m = M.modulus();
  const auto& H = M.residues();
  std::vector<std::size_t> label(m, static_cast<std::size_t>(-1));
  ClassGroup cg;
  for (u64 u = 1; u < m; ++u) {
    if (std::gcd(u, m) != 1 || label[u] != static_cast<std::size_t>(-1)) continue;
    const std::size_t idx = cg.cosets.size();
    cg.cosets.push_back(u);
    for (u64 h : H) label[mulmod(u, h, m)] = idx;
  }
  const std::size_t n = cg.cosets.size();
  cg.order = n;
  cg.table.assign(n, std::vector<std::size_t>(n));
  cg.law_well_defined = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cg.table[i][j] = label[mulmod(cg.cosets[i], cg.cosets[j], m)];
      for (u64 h1 : H)
        for (u64 h2 : H)
          if (label[mulmod(mulmod(cg.cosets[i], h1, m), mulmod(cg.cosets[j], h2, m), m)] != cg.table[i][j])
            cg.law_well_defined = false;
    }
  // Element orders in the quotient.
  std::vector<u64> order(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = i;
    u64 k = 1;
    while (x != 0) {
      x = cg.table[x][i];
      ++k;
    }
    order[i] = k;
  }
  // For each prime l | n: rank of the l^k-torsion gives the l-parts of the invariant factors.
  std::vector<std::vector<u64>> parts;  // per prime, exponents of cyclic factors descending
  for (auto [l, e] : factor_u64(n)) {
    std::vector<int> s;  // s[k] = log_l |G[l^k]|
    u64 lk = 1;
    for (int k = 0; k <= e; ++k) {
      u64 cnt = 0;
      for (u64 o : order)
        if (lk % o == 0) ++cnt;
      int sk = 0;
      while (cnt > 1) {
        cnt /= l;
        ++sk;
      }
      s.push_back(sk);
      lk *= l;
    }
    std::vector<u64> sizes;  // cyclic factor orders l^k, one per factor
    for (int k = 1; k <= e; ++k) {
      const int at_least_k = s[k] - s[k - 1];
      const int at_least_k1 = k < e ? s[k + 1] - s[k] : 0;
      u64 lpow = 1;
      for (int j = 0; j < k; ++j) lpow *= l;
      for (int c = 0; c < at_least_k - at_least_k1; ++c) sizes.push_back(lpow);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    parts.push_back(sizes);
  }
  std::size_t count = 0;
  for (const auto& v : parts) count = std::max(count, v.size());
  for (std::size_t i = 0; i < count; ++i) {
    u64 d = 1;
    for (const auto& v : parts)
      if (i < v.size()) d *= v[i];
    cg.invariant_factors.push_back(d);
  }
  std::reverse(cg.invariant_factors.begin(), cg.invariant_factors.end());
  cg.least_primes.assign(n, 0);
  std::size_t found = 0;
  for (u64 p : primes_below(prime_cap)) {
    if (m % p == 0) continue;
    const std::size_t c = label[p % m];
    if (cg.least_primes[c] == 0) {
      cg.least_primes[c] = p;
      if (++found == n) break;
    }
  }
  return cg;
}

SquareTest square_test(const ResidueMonoid& M, u64 a) {
  if (!M.is_hilbert()) throw std::invalid_argument("square_test: Hilbert monoids only");
  require_member(M, a);
  SquareTest t;
  const Integer r = sqrt(Integer(static_cast<unsigned long>(a)));
  t.square_in_M = r * r == a && M.contains(r);
  bool even = true;
  u64 root_cls = 1 % M.modulus();
  for (const auto& ip : ideal_factorization(M, a)) {
    if (ip.exponent % 2) even = false;
    root_cls = mulmod(root_cls, powmod(ip.cls, static_cast<u64>(ip.exponent / 2), M.modulus()), M.modulus());
  }
  t.square_in_QM = even && M.contains_residue(root_cls);
  return t;
}

SingularReport singular_demo(u64 cap) {
  const ResidueMonoid N = ResidueMonoid::singular();
  SingularReport r;
  r.six_over_two = defined_at(N, 2, 6, 2, cap);
  r.two_over_six = defined_at(N, 2, 2, 6, cap);
  const Integer root = sqrt(Integer(9));
  r.nine_square_in_N = root * root == 9 && N.contains(root);
  for (u64 d = 1; d <= cap; ++d)
    if (N.contains(d) && N.contains(3 * d)) {
      r.nine_root_in_QN = std::make_pair(3 * d, d);
      break;
    }
  r.holds = !r.six_over_two.defined && !r.two_over_six.defined && !r.nine_square_in_N &&
            r.nine_root_in_QN.has_value();
  return r;
}

}  // namespace kummer
