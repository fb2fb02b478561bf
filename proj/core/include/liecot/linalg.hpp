#pragma once

#include <cstddef>
#include <vector>

#include "liecot/matrix.hpp"

namespace liecot {

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form with deterministic pivoting: rows are processed
// top to bottom, the pivot is the first nonzero entry scanning left to right.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Incrementally absorbs constraint rows while maintaining a fully reduced
// echelon basis. Rank is bounded by the column count, so feeding thousands
// of redundant rows stays cheap.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  // Returns true when the row increased the rank.
  bool add_row(std::vector<Rational> row);
  void add_rows(const Matrix& m);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

  // Rows sorted by pivot column; this is the canonical RREF basis.
  Matrix basis() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;  // kept sorted by pivot column
  std::vector<std::size_t> pivot_cols_;
};

// Row space of a matrix in canonical form. A Subspace is the result type of
// every solver; equality of subspaces is syntactic equality of the bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  Subspace(std::size_t ambient_dim, const Matrix& spanning_rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

// Kernel of m as a canonical subspace of dimension cols - rank.
Subspace nullspace(const Matrix& m);
Subspace nullspace(const RowReducer& reduced_constraints);

struct Inertia {
  std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Sylvester inertia by exact symmetric congruence diagonalization. A zero
// diagonal pivot with a nonzero off-diagonal entry in its row is handled by
// the hyperbolic-pair congruence (add row/col j to row/col k), which
// contributes (1,1). Throws NotSymmetric when b is not symmetric.
Inertia inertia(const Matrix& b);

}  // namespace liecot
