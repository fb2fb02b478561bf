#include "liecot/linalg.hpp"

#include <algorithm>

#include "liecot/errors.hpp"

namespace liecot {

RrefResult rref(const Matrix& m) {
  RowReducer red(m.cols());
  red.add_rows(m);
  RrefResult out{red.basis(), red.pivots()};
  // Pad with zero rows so the shape matches the input.
  if (out.r.rows() < m.rows()) {
    Matrix padded(m.rows(), m.cols());
    for (std::size_t i = 0; i < out.r.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) padded(i, j) = out.r(i, j);
    out.r = padded;
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  RowReducer red(m.cols());
  red.add_rows(m);
  return red.rank();
}

bool RowReducer::add_row(std::vector<Rational> row) {
  // Reduce against existing pivot rows.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = row[pivot_cols_[k]];
    if (c == 0) continue;
    Rational f = c;  // pivot rows are normalized to leading 1
    for (std::size_t j = pivot_cols_[k]; j < cols_; ++j)
      if (rows_[k][j] != 0) row[j] -= f * rows_[k][j];
  }
  std::size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  // Normalize to leading 1.
  if (row[p] != 1) {
    Rational inv = Rational(1) / row[p];
    row[p] = 1;
    for (std::size_t j = p + 1; j < cols_; ++j)
      if (row[j] != 0) row[j] *= inv;
  }
  // Back-substitute into existing rows to keep the basis fully reduced.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = rows_[k][p];
    if (c == 0) continue;
    for (std::size_t j = p; j < cols_; ++j)
      if (row[j] != 0) rows_[k][j] -= c * row[j];
  }
  auto it = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), p);
  std::size_t idx = static_cast<std::size_t>(it - pivot_cols_.begin());
  pivot_cols_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
  return true;
}

void RowReducer::add_rows(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) add_row(m.row(i));
}

Matrix RowReducer::basis() const {
  Matrix b(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = rows_[i][j];
  return b;
}

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning_rows)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {
  if (spanning_rows.cols() != ambient_dim && spanning_rows.rows() != 0)
    throw DimensionMismatch("spanning rows do not match ambient dimension");
  RowReducer red(ambient_dim);
  red.add_rows(spanning_rows);
  basis_ = red.basis();
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector/ambient mismatch");
  std::vector<Rational> r = v;
  // Reduce by each basis row; pivots are leading 1s at increasing columns.
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_(i, p) == 0) ++p;
    if (p == ambient_ || r[p] == 0) continue;
    Rational f = r[p];
    for (std::size_t k = p; k < ambient_; ++k)
      if (basis_(i, k) != 0) r[k] -= f * basis_(i, k);
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient mismatch");
  RowReducer red(ambient_);
  red.add_rows(basis_);
  red.add_rows(other.basis_);
  return Subspace(ambient_, red.basis());
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient mismatch");
  // Zassenhaus: reduce rows [u|u] for u in A and [w|0] for w in B; rows whose
  // left half vanishes carry an intersection basis in the right half.
  RowReducer red(2 * ambient_);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::vector<Rational> row(2 * ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) row[j] = row[ambient_ + j] = basis_(i, j);
    red.add_row(std::move(row));
  }
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
    std::vector<Rational> row(2 * ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) row[j] = other.basis_(i, j);
    red.add_row(std::move(row));
  }
  Matrix all = red.basis();
  std::vector<std::vector<Rational>> inter;
  for (std::size_t i = 0; i < all.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < ambient_ && left_zero; ++j)
      if (all(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<Rational> v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = all(i, ambient_ + j);
    inter.push_back(std::move(v));
  }
  Matrix rows(inter.size(), ambient_);
  for (std::size_t i = 0; i < inter.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) rows(i, j) = inter[i][j];
  return Subspace(ambient_, rows);
}

Subspace nullspace(const RowReducer& red) {
  const std::size_t n = red.cols();
  const Matrix r = red.basis();
  const auto& piv = red.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;

  Matrix kernel_rows(n - piv.size(), n);
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    kernel_rows(out, f) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) kernel_rows(out, piv[k]) = -r(k, f);
    ++out;
  }
  return Subspace(n, kernel_rows);
}

Subspace nullspace(const Matrix& m) {
  RowReducer red(m.cols());
  red.add_rows(m);
  return nullspace(red);
}

Inertia inertia(const Matrix& b) {
  if (!b.is_symmetric()) throw NotSymmetric("inertia requires a symmetric matrix");
  Matrix a = b;
  const std::size_t n = a.rows();
  Inertia res;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Prefer swapping in a later nonzero diagonal (a congruence by a
      // permutation); the hyperbolic-pair move below then only runs when the
      // whole trailing diagonal vanishes, where it cannot cancel.
      std::size_t d = k + 1;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(d, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++res.n_zero;
          continue;
        }
        // Hyperbolic pair: a(k,k) becomes 2*a(k,j) != 0 and the block
        // contributes (1,1) to the inertia.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0)
      ++res.n_plus;
    else
      ++res.n_minus;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < n; ++c) a(c, r) -= f * a(c, k);
    }
  }
  return res;
}

}  // namespace liecot
