#pragma once

#include <string>
#include <vector>

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/finite_field.hpp"
#include "kummerlab/lattice.hpp"

namespace kummer {

/// Surjective ring homomorphism Z[a] -> F_{p^f} given by a -> xi, where xi
/// is a root of Phi_lambda in the target field. Its kernel is the ideal
/// prime attached to the map; maps with equal kernels are identified.
struct JacobiMap {
  unsigned lambda = 0;
  u64 p = 0;
  /// Residue degree; 1 for the ramified prime p = lambda.
  unsigned f = 0;
  FieldPtr field;
  /// Irreducible factor of Phi_lambda mod p that xi annihilates.
  PolyModP factor;
  FFElement xi;

  bool ramified() const { return p == lambda; }
  /// xi itself for degree-one maps, the defining factor otherwise.
  std::string label() const;
};

/// One map per distinct irreducible factor of Phi_lambda mod p, in the
/// canonical factor order. Throws std::invalid_argument unless both
/// lambda and p are prime.
std::vector<JacobiMap> enumerate_jacobi_maps(unsigned lambda, u64 p);

/// Evaluates the coefficient polynomial of x at xi.
FFElement apply(const JacobiMap& map, const CycElt& x);

/// u_i = map(eta_i), each a residue mod p. Requires e * f = lambda - 1.
std::vector<u64> period_residues(const JacobiMap& map, const PeriodSystem& periods);

/// The map composed with sigma_k (a -> xi^k), same target field.
JacobiMap precompose_conjugation(const JacobiMap& map, long long k);

/// Position of the canonical map with the same kernel as `map`.
std::size_t canonical_position(const std::vector<JacobiMap>& canonical, const JacobiMap& map);

struct IdealPrimeKernel {
  JacobiMap map;
  IntLattice lattice;  // in the power basis of Z[a]
};

/// HNF of {x : map(x) = 0}; index p^f.
IdealPrimeKernel kernel(const JacobiMap& map);

/// sigma_k applied to every vector of a lattice in the power basis of Z[a].
IntLattice conjugate_lattice(const IntLattice& l, unsigned lambda, long long k);

}  // namespace kummer
