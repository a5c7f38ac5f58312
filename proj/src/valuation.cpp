#include "kummerlab/valuation.hpp"

#include <sstream>
#include <stdexcept>

#include "kummerlab/errors.hpp"

namespace kummer {

PeriodSystem decomposition_periods(const JacobiMap& map) {
  return gaussian_periods(map.lambda, (map.lambda - 1) / map.f);
}

std::optional<KummerPrime> certify_uniformizer(const JacobiMap& map, const PeriodSystem& periods,
                                               const Integer& c, const IntVec& coeffs) {
  const CycElt psi = periods.combination(c, coeffs);
  if (psi.is_zero() || !apply(map, psi).is_zero()) return std::nullopt;
  CycElt big_psi = CycRing::of(map.lambda).one();
  for (unsigned j = 1; j < periods.e; ++j) big_psi *= periods.rotated_combination(c, coeffs, j);
  const CycElt n = psi * big_psi;
  if (!n.is_rational()) throw MathError("certify_uniformizer: period norm is not rational");
  const Integer q(static_cast<unsigned long>(map.p));
  const Integer& value = n.rational_value();
  if (value == 0 || !mpz_divisible_p(value.get_mpz_t(), q.get_mpz_t())) return std::nullopt;
  const Integer q2 = q * q;
  if (mpz_divisible_p(value.get_mpz_t(), q2.get_mpz_t())) return std::nullopt;
  KummerPrime k{map, periods, period_residues(map, periods), c, coeffs, psi, big_psi, value};
  return k;
}

namespace {

Integer ordered_value(int index) {
  // 0, 1, -1, 2, -2, ...
  return index % 2 ? Integer((index + 1) / 2) : Integer(-(index / 2));
}

long long ordered_value_ll(int index) { return index % 2 ? (index + 1) / 2 : -(index / 2); }

}  // namespace

KummerPrime find_uniformizer(const JacobiMap& map, const PeriodSystem& periods, int bound) {
  if (periods.f != map.f && !(map.ramified() && periods.e == map.lambda - 1))
    throw std::invalid_argument("find_uniformizer: period system does not match the map");
  const std::vector<u64> u = period_residues(map, periods);
  const std::size_t len = periods.e + 1;  // constant term first
  const u64 p = map.p;
  const long long pp = static_cast<long long>(p);
  std::vector<long long> w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = i == 0 ? 1 % pp : static_cast<long long>(u[i - 1] % p);
  auto residue = [pp](long long v) { return (v % pp + pp) % pp; };
  auto try_candidate = [&](const std::vector<int>& idx) -> std::optional<KummerPrime> {
    IntVec coeffs(periods.e);
    for (std::size_t i = 1; i < len; ++i) coeffs[i - 1] = ordered_value(idx[i]);
    return certify_uniformizer(map, periods, ordered_value(idx[0]), coeffs);
  };
  for (int r = 1; r <= bound; ++r) {
    const int width = 2 * r + 1;
    // The last coordinate is solved from the residue condition
    // map(psi) = c + sum c_i u_i = 0 mod p instead of enumerated.
    const std::size_t last = len - 1;
    const bool solvable = w[last] != 0 && pp > 2 * r;
    const long long inv_last = solvable ? static_cast<long long>(invmod(static_cast<u64>(w[last]), p)) : 0;
    // term[i][j] = ordered_value(j) * w[i] mod p; partial[i] sums the first i terms.
    std::vector<std::vector<long long>> term(len, std::vector<long long>(width));
    for (std::size_t i = 0; i < len; ++i)
      for (int j = 0; j < width; ++j)
        term[i][j] = static_cast<long long>(mulmod(residue(ordered_value_ll(j)), w[i], p));
    std::vector<int> idx(len, 0);
    std::vector<long long> partial(len, 0);
    std::vector<int> pmax(len, 0);
    std::size_t dirty = 0;
    while (true) {
      for (std::size_t i = dirty; i < last; ++i) {
        partial[i + 1] = (partial[i] + term[i][idx[i]]) % pp;
        pmax[i + 1] = std::max(pmax[i], (idx[i] + 1) / 2);
      }
      const long long acc = partial[last];
      const int prefix_max = pmax[last];
      auto consider = [&](int j) -> std::optional<KummerPrime> {
        if (std::max(prefix_max, (j + 1) / 2) != r) return std::nullopt;
        idx[last] = j;
        return try_candidate(idx);
      };
      if (solvable) {
        long long v = residue(static_cast<long long>(mulmod(residue(-acc), inv_last, p)));
        if (v > pp / 2) v -= pp;
        if (v >= -r && v <= r) {
          if (auto k = consider(v > 0 ? static_cast<int>(2 * v - 1) : static_cast<int>(-2 * v))) return *k;
        }
      } else {
        for (int j = 0; j < width; ++j)
          if ((acc + term[last][j]) % pp == 0)
            if (auto k = consider(j)) return *k;
      }
      idx[last] = 0;
      std::size_t pos = last;
      while (pos-- > 0) {
        if (++idx[pos] < width) break;
        idx[pos] = 0;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
      dirty = pos;
    }
  }
  throw BoundExceeded("find_uniformizer: no uniformizer for p=" + std::to_string(p) + " map " +
                          map.label(),
                      bound);
}

std::optional<KummerPrime> linear_uniformizer(const JacobiMap& map, const PeriodSystem& periods) {
  const u64 u0 = period_residues(map, periods)[0];
  IntVec coeffs(periods.e, Integer(0));
  coeffs[0] = 1;
  const Integer q(static_cast<unsigned long>(map.p));
  for (int k = 0; k <= 1; ++k)
    if (auto c = certify_uniformizer(map, periods, k * q - Integer(static_cast<unsigned long>(u0)), coeffs)) return c;
  return std::nullopt;
}

KummerPrime make_kummer_prime(const JacobiMap& map, int bound, int max_bound) {
  const PeriodSystem periods = decomposition_periods(map);
  try {
    return find_uniformizer(map, periods, bound);
  } catch (const BoundExceeded&) {
    if (auto k = linear_uniformizer(map, periods)) return *k;
    if (bound >= max_bound) throw;
  }
  for (int b = bound + 1;; ++b) {
    try {
      return find_uniformizer(map, periods, b);
    } catch (const BoundExceeded&) {
      if (b >= max_bound) throw;
    }
  }
}

int multiplicity(const CycElt& x, const KummerPrime& prime) {
  if (x.is_zero()) throw std::invalid_argument("multiplicity: valuation of zero is infinite");
  if (!apply(prime.map, x).is_zero()) return 0;
  // y_m = x Psi^m / q^m stays integral exactly while the test succeeds.
  const Integer q = prime.q();
  const Integer nx = abs(norm(x));
  const int cap = valuation_of(nx, q);
  CycElt y = x;
  int mu = 0;
  while (true) {
    CycElt next = y * prime.conjugate_product;
    if (!next.divisible_by(q)) break;
    y = next.divexact(q);
    ++mu;
    if (mu > cap) throw MathError("multiplicity exceeds the norm bound");
  }
  return mu;
}

std::vector<bool> divisibility_profile(const CycElt& x, const KummerPrime& prime, int upto) {
  std::vector<bool> out;
  const Integer q = prime.q();
  CycElt y = x;
  Integer qm = 1;
  for (int m = 0; m <= upto; ++m) {
    out.push_back(y.divisible_by(qm));
    y *= prime.conjugate_product;
    qm *= q;
  }
  return out;
}

KernelPowers::KernelPowers(const JacobiMap& map) : map_(map) {
  powers_.push_back(full_lattice(CycRing::of(map.lambda).degree()));
  powers_.push_back(kernel(map).lattice);
}

const IntLattice& KernelPowers::power(int k) {
  const MultTable& table = CycRing::of(map_.lambda).mult_table();
  while (static_cast<int>(powers_.size()) <= k)
    powers_.push_back(product(powers_.back(), powers_[1], table));
  return powers_[static_cast<std::size_t>(k)];
}

int KernelPowers::valuation(const CycElt& x) {
  if (x.is_zero()) throw std::invalid_argument("valuation_oracle: valuation of zero is infinite");
  int mu = 0;
  while (power(mu + 1).contains(x.coeffs())) {
    ++mu;
    if (mu > 100000) throw MathError("valuation_oracle: runaway valuation");
  }
  return mu;
}

int valuation_oracle(const CycElt& x, const JacobiMap& map) {
  KernelPowers powers(map);
  return powers.valuation(x);
}

bool is_defined_at(const CycElt& num, const CycElt& den, const KummerPrime& prime) {
  if (den.is_zero()) throw std::invalid_argument("is_defined_at: zero denominator");
  if (num.is_zero()) return true;
  return multiplicity(num, prime) >= multiplicity(den, prime);
}

bool is_defined_at_oracle(const CycElt& num, const CycElt& den, const JacobiMap& map) {
  if (den.is_zero()) throw std::invalid_argument("is_defined_at: zero denominator");
  const MultTable& table = CycRing::of(map.lambda).mult_table();
  const IntLattice c = colon(principal_ideal(den.coeffs(), table), num.coeffs(), table);
  return !kernel(map).lattice.contains(c);
}

const std::vector<JacobiMap>& PrimeCache::maps_over(u64 p) {
  auto it = maps_.find(p);
  if (it == maps_.end()) it = maps_.emplace(p, enumerate_jacobi_maps(lambda_, p)).first;
  return it->second;
}

const std::vector<KummerPrime>& PrimeCache::primes_over(u64 p) {
  auto it = primes_.find(p);
  if (it == primes_.end()) {
    std::vector<KummerPrime> ks;
    for (const auto& m : maps_over(p)) ks.push_back(make_kummer_prime(m, bound_, max_bound_));
    it = primes_.emplace(p, std::move(ks)).first;
  }
  return it->second;
}

IdealFactorization factorize(const CycElt& x, const FactorOptions& opts, PrimeCache* cache) {
  if (x.is_zero()) throw std::invalid_argument("factorize: zero has no factorization");
  const unsigned lambda = x.ring().conductor();
  if (!x.ring().prime_conductor()) throw std::invalid_argument("factorize: conductor must be prime");
  PrimeCache local(lambda, opts.uniformizer_bound, opts.uniformizer_max_bound);
  PrimeCache& pc = cache ? *cache : local;
  IdealFactorization out{x, norm(x), {}, {}};
  if (abs(out.norm) == 1) {
    out.unit_remark = "unit";
    return out;
  }
  for (const auto& [prime, vp] : factor_integer(out.norm, opts.trial_bound)) {
    const u64 p = prime.get_ui();
    int total = 0;
    for (const auto& k : pc.primes_over(p)) {
      const int mu = multiplicity(x, k);
      total += static_cast<int>(k.map.f) * mu;
      out.records.push_back({std::make_shared<const KummerPrime>(k), mu});
    }
    if (total != vp) {
      std::ostringstream os;
      os << "factorize: sum f*mu = " << total << " but v_" << p << "(N) = " << vp;
      throw MathError(os.str());
    }
  }
  out.unit_remark = "element equals a unit times the product of the listed ideal prime powers";
  return out;
}

std::optional<CycElt> exact_quotient(const CycElt& x, const CycElt& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_quotient: zero divisor");
  const CycElt co = cofactor(d);
  const Integer n = norm(d);
  const CycElt t = x * co;
  if (!t.divisible_by(n)) return std::nullopt;
  return t.divexact(n);
}

DivisibilityVerdict divisibility(const CycElt& d, const CycElt& x, const FactorOptions& opts,
                                 PrimeCache* cache) {
  DivisibilityVerdict v;
  v.quotient = exact_quotient(x, d);
  v.by_division = v.quotient.has_value();
  PrimeCache local(d.ring().conductor(), opts.uniformizer_bound, opts.uniformizer_max_bound);
  PrimeCache& pc = cache ? *cache : local;
  v.by_valuations = true;
  if (!x.is_zero()) {
    const Integer nd = norm(d);
    if (abs(nd) != 1) {
      for (const auto& [prime, e] : factor_integer(nd, opts.trial_bound)) {
        for (const auto& k : pc.primes_over(prime.get_ui())) {
          if (multiplicity(d, k) > multiplicity(x, k)) {
            v.by_valuations = false;
            break;
          }
        }
        if (!v.by_valuations) break;
      }
    }
  }
  return v;
}

bool divides(const CycElt& d, const CycElt& x, const FactorOptions& opts, PrimeCache* cache) {
  const DivisibilityVerdict v = divisibility(d, x, opts, cache);
  if (v.by_division != v.by_valuations)
    throw MathError("divides: exact division and valuation comparison disagree");
  return v.by_division;
}

}  // namespace kummer
