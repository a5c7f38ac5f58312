#pragma once

#include <random>
#include <vector>

#include "kummerlab/cyclotomic.hpp"

namespace oracle {

using kummer::u64;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 order(u64 a, u64 n) {
  u64 x = a % n, k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

inline u64 primitive_root(u64 p) {
  for (u64 g = 2;; ++g)
    if (order(g, p) == p - 1) return g;
}

inline u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  for (b %= m; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

/// Evaluates the coefficient vector at xi mod p.
inline u64 evaluate(const kummer::CycElt& x, u64 xi, u64 p) {
  u64 acc = 0, pw = 1;
  for (const auto& c : x.coeffs()) {
    const kummer::Integer r = ((c % p) + p) % p;
    acc = (acc + r.get_ui() * pw) % p;
    pw = pw * xi % p;
  }
  return acc;
}

/// Sum over t of a^(i log t + k log(1 - t)), by brute-force discrete logs.
inline kummer::CycElt jacobi_psi(u64 p, unsigned lambda, long long i, long long k) {
  const u64 g = primitive_root(p);
  std::vector<u64> log(p, 0);
  u64 x = 1;
  for (u64 e = 0; e < p - 1; ++e, x = x * g % p) log[x] = e;
  std::vector<kummer::Integer> cyc(lambda, 0);
  const long long L = lambda;
  for (u64 t = 2; t < p; ++t) {
    const long long e = (((i * static_cast<long long>(log[t]) + k * static_cast<long long>(log[p + 1 - t])) % L) + L) % L;
    cyc[static_cast<std::size_t>(e)] += 1;
  }
  return kummer::CycRing::of(lambda).from_poly(kummer::PolyInt(cyc));
}

inline kummer::CycElt random_element(std::mt19937_64& rng, const kummer::CycRing& R, long lo, long hi) {
  while (true) {
    kummer::IntVec c(R.degree());
    for (auto& v : c) v = lo + static_cast<long>(rng() % static_cast<u64>(hi - lo + 1));
    kummer::CycElt x = R.from_coeffs(c);
    if (!x.is_zero()) return x;
  }
}

}  // namespace oracle
