#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kummerlab/integer.hpp"

namespace kummer {

using IntVec = std::vector<Integer>;

/// Row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  IntVec row(std::size_t i) const;
  std::vector<IntVec> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Structure constants of an order with Z-basis e_0..e_{d-1}:
/// e_i * e_j = sum_k c(i, j, k) e_k.
class MultTable {
 public:
  MultTable() = default;
  explicit MultTable(std::size_t d) : d_(d), c_(d * d * d) {}
  std::size_t dim() const { return d_; }
  Integer& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * d_ + j) * d_ + k]; }
  const Integer& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * d_ + j) * d_ + k];
  }
  IntVec multiply(std::span<const Integer> a, std::span<const Integer> b) const;
  /// Matrix of y -> x*y in the basis (row i is x*e_i).
  IntMatrix left_multiplication(std::span<const Integer> x) const;

 private:
  std::size_t d_ = 0;
  std::vector<Integer> c_;
};

/// Full-rank sublattice of Z^d stored by its Hermite normal form: upper
/// triangular rows, positive pivots, entries above each pivot reduced into
/// [0, pivot). Two bases of the same lattice give identical HNFs.
class IntLattice {
 public:
  IntLattice() = default;
  std::size_t dim() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  /// Index [Z^d : L], the product of the pivots.
  Integer index() const;
  bool contains(std::span<const Integer> v) const;
  bool contains(const IntLattice& other) const;
  /// Coordinates of v in the HNF basis, if v lies in the lattice.
  std::optional<IntVec> coordinates(std::span<const Integer> v) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) { return a.basis_ == b.basis_; }

  std::string to_string() const;

 private:
  friend IntLattice hnf(const IntMatrix& rows);
  IntMatrix basis_;
};

/// Echelon (Hermite) form of the row span of an arbitrary integer matrix;
/// returns only the nonzero rows.
IntMatrix hermite_rows(const IntMatrix& rows);

/// HNF lattice of the row span. Throws std::invalid_argument when the rows
/// do not span a full-rank sublattice.
IntLattice hnf(const IntMatrix& rows);
IntLattice hnf(const std::vector<IntVec>& rows, std::size_t dim);

/// The whole ambient lattice Z^d.
IntLattice full_lattice(std::size_t d);
/// x*O for the order described by `table`.
IntLattice principal_ideal(std::span<const Integer> x, const MultTable& table);
IntLattice sum(const IntLattice& a, const IntLattice& b);
/// Ideal product: lattice spanned by all pairwise products of basis vectors.
IntLattice product(const IntLattice& a, const IntLattice& b, const MultTable& table);
/// {delta in Z^d : v * delta in L}. For L = gamma*O this is the colon ideal
/// (gamma O : v).
IntLattice colon(const IntLattice& lattice, std::span<const Integer> v, const MultTable& table);

}  // namespace kummer
