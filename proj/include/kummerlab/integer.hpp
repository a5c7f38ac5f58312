#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

/// Arbitrary precision signed integer.
using Integer = mpz_class;
/// Exact rational number.
using Rational = mpq_class;

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}
u64 powmod(u64 base, u64 exp, u64 m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);
/// Least non-negative residue of x modulo m.
u64 mod_u64(const Integer& x, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);
bool is_prime(const Integer& n);

/// Trial-division factorization of |n| (n != 0). Primes up to `trial_bound`
/// are divided out; a remaining cofactor is accepted when it is below
/// trial_bound^2 or fits in 64 bits and passes Miller-Rabin. Anything else
/// raises BoundExceeded.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n,
                                                    u64 trial_bound = 1000000);
std::vector<std::pair<u64, int>> factor_u64(u64 n);

u64 euler_phi(u64 n);
/// Multiplicative order of a modulo n (gcd(a, n) must be 1).
u64 multiplicative_order(u64 a, u64 n);
/// Least positive primitive root modulo the prime p.
u64 least_primitive_root(u64 p);
std::vector<u64> primes_below(u64 bound);

/// Exponent of the prime p in x (x != 0).
int valuation_of(const Integer& x, const Integer& p);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

std::string to_string(const Integer& x);

}  // namespace kummer
