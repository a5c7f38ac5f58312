#include "kummerlab/lattice.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace kummer {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntVec MultTable::multiply(std::span<const Integer> a, std::span<const Integer> b) const {
  if (a.size() != d_ || b.size() != d_) throw std::invalid_argument("MultTable: dimension mismatch");
  IntVec r(d_, Integer(0));
  for (std::size_t i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (b[j] == 0) continue;
      const Integer ab = a[i] * b[j];
      for (std::size_t k = 0; k < d_; ++k)
        if ((*this)(i, j, k) != 0) r[k] += ab * (*this)(i, j, k);
    }
  }
  return r;
}

IntMatrix MultTable::left_multiplication(std::span<const Integer> x) const {
  IntMatrix m(d_, d_);
  IntVec e(d_, Integer(0));
  for (std::size_t i = 0; i < d_; ++i) {
    e[i] = 1;
    IntVec r = multiply(x, e);
    for (std::size_t k = 0; k < d_; ++k) m(i, k) = r[k];
    e[i] = 0;
  }
  return m;
}

namespace {

void row_axpy(std::vector<IntVec>& a, std::size_t dst, const Integer& s, std::size_t src) {
  for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += s * a[src][j];
}

}  // namespace

IntMatrix hermite_rows(const IntMatrix& m) {
  std::vector<IntVec> a = m.to_rows();
  const std::size_t ncols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      if (a[r][col] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      // Unimodular 2x2 step putting gcd(a[r][col], a[i][col]) into row r.
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][col].get_mpz_t(), a[i][col].get_mpz_t());
      const Integer x = a[r][col] / g, y = a[i][col] / g;
      for (std::size_t j = col; j < ncols; ++j) {
        const Integer u = a[r][j], v = a[i][j];
        a[r][j] = s * u + t * v;
        a[i][j] = x * v - y * u;
      }
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (auto& v : a[r]) v = -v;
    for (std::size_t k = 0; k < r; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[k][col].get_mpz_t(), a[r][col].get_mpz_t());
      if (q != 0) row_axpy(a, k, -q, r);
    }
    pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  return IntMatrix::from_rows(a, ncols);
}

IntLattice hnf(const IntMatrix& rows) {
  IntMatrix h = hermite_rows(rows);
  if (h.rows() != rows.cols()) throw std::invalid_argument("hnf: rows do not span a full-rank lattice");
  IntLattice l;
  l.basis_ = std::move(h);
  return l;
}

IntLattice hnf(const std::vector<IntVec>& rows, std::size_t dim) {
  return hnf(IntMatrix::from_rows(rows, dim));
}

Integer IntLattice::index() const {
  Integer r = 1;
  for (std::size_t i = 0; i < dim(); ++i) r *= basis_(i, i);
  return r;
}

std::optional<IntVec> IntLattice::coordinates(std::span<const Integer> v) const {
  const std::size_t d = dim();
  if (v.size() != d) throw std::invalid_argument("IntLattice: dimension mismatch");
  IntVec rest(v.begin(), v.end());
  IntVec coords(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!mpz_divisible_p(rest[i].get_mpz_t(), basis_(i, i).get_mpz_t())) return std::nullopt;
    coords[i] = rest[i] / basis_(i, i);
    if (coords[i] != 0)
      for (std::size_t j = i; j < d; ++j) rest[j] -= coords[i] * basis_(i, j);
  }
  return coords;
}

bool IntLattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

bool IntLattice::contains(const IntLattice& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("IntLattice: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::string IntLattice::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    os << (i ? ", " : "") << "(";
    for (std::size_t j = 0; j < dim(); ++j) os << (j ? "," : "") << basis_(i, j).get_str();
    os << ")";
  }
  os << "]";
  return os.str();
}

IntLattice full_lattice(std::size_t d) { return hnf(IntMatrix::identity(d)); }

IntLattice principal_ideal(std::span<const Integer> x, const MultTable& table) {
  return hnf(table.left_multiplication(x));
}

IntLattice sum(const IntLattice& a, const IntLattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sum: dimension mismatch");
  auto rows = a.basis().to_rows();
  for (auto& r : b.basis().to_rows()) rows.push_back(std::move(r));
  return hnf(rows, a.dim());
}

IntLattice product(const IntLattice& a, const IntLattice& b, const MultTable& table) {
  const std::size_t d = table.dim();
  if (a.dim() != d || b.dim() != d) throw std::invalid_argument("product: dimension mismatch");
  // a.index()*b.index() * O lies in the product, which keeps entries small.
  const Integer bound = a.index() * b.index();
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec r(d, Integer(0));
    r[i] = bound;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < d; ++i) {
    const IntVec x = a.basis().row(i);
    for (std::size_t j = 0; j < d; ++j) rows.push_back(table.multiply(x, b.basis().row(j)));
  }
  return hnf(rows, d);
}

IntLattice colon(const IntLattice& lattice, std::span<const Integer> v, const MultTable& table) {
  const std::size_t d = table.dim();
  if (lattice.dim() != d || v.size() != d) throw std::invalid_argument("colon: dimension mismatch");
  // Rows (v*e_i | e_i) and (h_j | 0); the part of the row span with a
  // vanishing left block is {(0 | delta) : v*delta in L}.
  const IntMatrix mult = table.left_multiplication(v);
  IntMatrix big(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) big(i, k) = mult(i, k);
    big(i, d + i) = 1;
    for (std::size_t k = 0; k < d; ++k) big(d + i, k) = lattice.basis()(i, k);
  }
  const IntMatrix h = hermite_rows(big);
  IntMatrix tail(d, d);
  std::size_t t = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t k = 0; k < d && left_zero; ++k) left_zero = h(i, k) == 0;
    if (!left_zero) continue;
    if (t == d) throw std::logic_error("colon: unexpected rank");
    for (std::size_t k = 0; k < d; ++k) tail(t, k) = h(i, d + k);
    ++t;
  }
  if (t != d) throw std::logic_error("colon: kernel lattice not full rank");
  return hnf(tail);
}

}  // namespace kummer
