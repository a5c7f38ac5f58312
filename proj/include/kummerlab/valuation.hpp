#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/ideal_primes.hpp"

namespace kummer {

/// An ideal prime in Kummer's presentation: a Jacobi map together with a
/// uniformizer psi built from the Gaussian periods of the decomposition
/// field, and Psi, the product of the other period conjugates of psi.
/// Certificate: psi * Psi is a rational integer divisible by q exactly once.
struct KummerPrime {
  JacobiMap map;
  PeriodSystem periods;
  std::vector<u64> residues;  // u_i = map(eta_i)
  /// psi = psi_constant + sum psi_coeffs[i] * eta_i
  Integer psi_constant;
  IntVec psi_coeffs;
  CycElt psi;
  CycElt conjugate_product;  // Psi
  Integer period_norm;       // psi * Psi

  const Integer q() const { return Integer(static_cast<unsigned long>(map.p)); }
};

/// Periods of the decomposition field of the map: e = (lambda-1)/f. The
/// ramified prime uses the singleton periods a^k (e = lambda - 1), so Psi
/// is the product of all other conjugates of psi.
PeriodSystem decomposition_periods(const JacobiMap& map);

/// Checks the uniformizer certificate for psi = c + sum coeffs[i] eta_i.
std::optional<KummerPrime> certify_uniformizer(const JacobiMap& map, const PeriodSystem& periods,
                                               const Integer& c, const IntVec& coeffs);

/// Deterministic search over psi = c + sum c_i eta_i with |c|, |c_i| <= bound:
/// shells of increasing max-norm, lexicographic inside a shell with values
/// ordered 0, 1, -1, 2, -2, ... Throws BoundExceeded when nothing is found.
KummerPrime find_uniformizer(const JacobiMap& map, const PeriodSystem& periods, int bound);

/// psi = eta_0 - u_0 + k q for k = 0, 1: its period norm is the period
/// polynomial at u_0 - k q, exactly divisible by q for one of the two.
std::optional<KummerPrime> linear_uniformizer(const JacobiMap& map, const PeriodSystem& periods);

/// find_uniformizer with the decomposition periods at `bound`, then
/// linear_uniformizer, then the search again with bounds up to `max_bound`.
KummerPrime make_kummer_prime(const JacobiMap& map, int bound = 3, int max_bound = 6);

/// Kummer's multiplicity: the largest mu with x * Psi^mu divisible by q^mu
/// coefficientwise. Throws std::invalid_argument for x == 0.
int multiplicity(const CycElt& x, const KummerPrime& prime);

/// entry m is true iff x * Psi^m is divisible by q^m, for m = 0..upto.
std::vector<bool> divisibility_profile(const CycElt& x, const KummerPrime& prime, int upto);

/// Powers of the kernel lattice of a Jacobi map, computed on demand.
class KernelPowers {
 public:
  explicit KernelPowers(const JacobiMap& map);
  const JacobiMap& map() const { return map_; }
  const IntLattice& power(int k);
  /// Largest mu with x in ker^mu. Throws std::invalid_argument for x == 0.
  int valuation(const CycElt& x);

 private:
  JacobiMap map_;
  std::vector<IntLattice> powers_;
};

/// Independent multiplicity via iterated lattice products of the kernel.
int valuation_oracle(const CycElt& x, const JacobiMap& map);

/// map is defined at num/den: v(num) >= v(den) by Kummer multiplicities.
bool is_defined_at(const CycElt& num, const CycElt& den, const KummerPrime& prime);
/// Same decision via colon ideals: (den O : num) not inside ker(map).
bool is_defined_at_oracle(const CycElt& num, const CycElt& den, const JacobiMap& map);

/// Caches Jacobi maps and Kummer primes per rational prime for one lambda.
class PrimeCache {
 public:
  explicit PrimeCache(unsigned lambda, int bound = 3, int max_bound = 6)
      : lambda_(lambda), bound_(bound), max_bound_(max_bound) {}
  unsigned lambda() const { return lambda_; }
  const std::vector<KummerPrime>& primes_over(u64 p);
  const std::vector<JacobiMap>& maps_over(u64 p);

 private:
  unsigned lambda_;
  int bound_, max_bound_;
  std::map<u64, std::vector<JacobiMap>> maps_;
  std::map<u64, std::vector<KummerPrime>> primes_;
};

struct ValuationRecord {
  std::shared_ptr<const KummerPrime> prime;
  int mu = 0;
};

struct IdealFactorization {
  CycElt element;
  Integer norm;
  /// Every map of every prime dividing the norm, sorted by (p, map order).
  std::vector<ValuationRecord> records;
  std::string unit_remark;
};

struct FactorOptions {
  u64 trial_bound = 1000000;
  int uniformizer_bound = 3;
  int uniformizer_max_bound = 6;
};

/// Ideal prime factorization of x != 0. Validates sum f*mu = v_p(N(x)) for
/// every p before returning (MathError otherwise).
IdealFactorization factorize(const CycElt& x, const FactorOptions& opts = {},
                             PrimeCache* cache = nullptr);

struct DivisibilityVerdict {
  bool by_division = false;
  bool by_valuations = false;
  std::optional<CycElt> quotient;
};

/// Both routes: exact division x * cofactor(d) / N(d), and comparing
/// valuations at every map over primes dividing N(d).
DivisibilityVerdict divisibility(const CycElt& d, const CycElt& x, const FactorOptions& opts = {},
                                 PrimeCache* cache = nullptr);
/// d | x in Z[a]; throws MathError when the two routes disagree.
bool divides(const CycElt& d, const CycElt& x, const FactorOptions& opts = {},
             PrimeCache* cache = nullptr);
/// x / d when it lies in Z[a].
std::optional<CycElt> exact_quotient(const CycElt& x, const CycElt& d);

}  // namespace kummer
