#include "kummerlab/integer.hpp"

#include <numeric>
#include <stdexcept>

#include "kummerlab/errors.hpp"

namespace kummer {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  Integer inv;
  Integer aa(std::to_string(a % m)), mm(std::to_string(m));
  if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw std::domain_error("invmod: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
  return mod_u64(inv, m);
}

u64 mod_u64(const Integer& x, u64 m) {
  Integer r;
  Integer mm(std::to_string(m));
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
  return std::stoull(r.get_str());
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<u64>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n, u64 trial_bound) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  Integer rest = abs(n);
  std::vector<std::pair<Integer, int>> out;
  for (u64 d = 2; d <= trial_bound; d += (d == 2 ? 1 : 2)) {
    Integer dd(std::to_string(d));
    if (dd * dd > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= dd;
      ++e;
    }
    if (e) out.emplace_back(dd, e);
  }
  if (rest > 1) {
    Integer tb(std::to_string(trial_bound));
    const bool small_enough = rest <= tb * tb;
    const bool certified = mpz_fits_ulong_p(rest.get_mpz_t()) && is_prime(static_cast<u64>(rest.get_ui()));
    if (!small_enough && !certified)
      throw BoundExceeded("cofactor " + rest.get_str() + " not factored by trial division",
                          static_cast<long long>(trial_bound));
    out.emplace_back(rest, 1);
  }
  return out;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1)
    throw std::domain_error("multiplicative_order: argument not a unit");
  u64 order = euler_phi(n);
  for (auto [q, e] : factor_u64(order)) {
    for (int i = 0; i < e && order % q == 0 && powmod(a, order / q, n) == 1; ++i) order /= q;
  }
  return order;
}

u64 least_primitive_root(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("least_primitive_root: modulus not prime");
  if (p == 2) return 1;
  const auto fac = factor_u64(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("least_primitive_root: none found");
}

std::vector<u64> primes_below(u64 bound) {
  std::vector<u64> out;
  for (u64 n = 2; n < bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

int valuation_of(const Integer& x, const Integer& p) {
  if (x == 0) throw std::invalid_argument("valuation_of: zero");
  Integer r = x;
  int v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    r /= p;
    ++v;
  }
  return v;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace kummer
