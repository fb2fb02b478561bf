#include "liecot/lie_algebra.hpp"

#include <algorithm>
#include <utility>

#include "liecot/errors.hpp"

namespace liecot {

Vector::Vector(const LieAlgebra& algebra, std::vector<Rational> coords)
    : alg_(&algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra.dim())
    throw DimensionMismatch("vector length does not match algebra dimension");
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Vector::operator==(const Vector& o) const {
  return alg_->same_structure(*o.alg_) && coords_ == o.coords_;
}

LieAlgebra::LieAlgebra(std::string name, std::size_t dim,
                       std::vector<BracketEntry> brackets,
                       std::vector<std::string> basis_labels)
    : name_(std::move(name)), dim_(dim), table_(std::move(brackets)),
      labels_(std::move(basis_labels)) {
  for (auto& e : table_) {
    if (e.i >= e.j || e.j >= dim_)
      throw InvalidParam("bracket entry indices must satisfy i < j < dim");
    if (e.coords.size() != dim_)
      throw DimensionMismatch("bracket coordinate length");
  }
  std::sort(table_.begin(), table_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (std::size_t k = 1; k < table_.size(); ++k)
    if (table_[k - 1].i == table_[k].i && table_[k - 1].j == table_[k].j)
      throw InvalidParam("duplicate bracket entry");
  if (labels_.empty()) {
    labels_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw DimensionMismatch("basis label count");

  ad_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      auto c = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c[k];
    }
    ad_.push_back(std::move(m));
  }
  validate_jacobi();
  detect_cotangent_structure();
}

void LieAlgebra::detect_cotangent_structure() {
  if (dim_ % 2 != 0) return;
  const std::size_t n = dim_ / 2;
  for (const auto& e : table_) {
    if (e.j < n) {  // base x base stays in the base block
      for (std::size_t k = n; k < dim_; ++k)
        if (e.coords[k] != 0) return;
    } else if (e.i >= n) {  // dual x dual vanishes
      return;
    } else {  // mixed lands in the dual block
      for (std::size_t k = 0; k < n; ++k)
        if (e.coords[k] != 0) return;
    }
  }
  // Mixed brackets must equal the coadjoint action of the base block:
  // [e_i, e_{n+a}]_{n+k} = -[e_i, e_k]_a for the base structure constants.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto mixed = bracket_basis(i, n + a);
      for (std::size_t k = 0; k < n; ++k)
        if (mixed[n + k] != -bracket_basis(i, k)[a]) return;
    }
  cotangent_base_ = n;
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  std::vector<Rational> zero(dim_);
  if (i == j) return zero;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = std::lower_bound(table_.begin(), table_.end(), std::pair(i, j),
                             [](const BracketEntry& e, const std::pair<std::size_t, std::size_t>& p) {
                               return std::pair(e.i, e.j) < p;
                             });
  if (it == table_.end() || it->i != i || it->j != j) return zero;
  if (!flip) return it->coords;
  auto c = it->coords;
  for (auto& x : c) x = -x;
  return c;
}

void LieAlgebra::validate_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        std::vector<Rational> s(dim_);
        auto acc = [&](std::size_t a, const std::vector<Rational>& inner) {
          for (std::size_t m = 0; m < dim_; ++m) {
            if (inner[m] == 0) continue;
            auto outer = bracket_basis(a, m);
            for (std::size_t t = 0; t < dim_; ++t) s[t] += inner[m] * outer[t];
          }
        };
        acc(i, bracket_basis(j, k));
        acc(j, bracket_basis(k, i));
        acc(k, bracket_basis(i, j));
        for (const auto& x : s)
          if (x != 0)
            throw JacobiFailure("Jacobi identity fails on basis triple (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "," + std::to_string(k + 1) + ") of " + name_);
      }
}

Vector LieAlgebra::vector(std::vector<Rational> coords) const {
  return Vector(*this, std::move(coords));
}

Vector LieAlgebra::basis_vector(std::size_t i) const {
  std::vector<Rational> c(dim_);
  c[i] = 1;
  return Vector(*this, std::move(c));
}

Vector LieAlgebra::zero_vector() const { return Vector(*this, std::vector<Rational>(dim_)); }

Matrix LieAlgebra::ad_matrix(const Vector& x) const {
  if (!same_structure(x.algebra())) throw AlgebraMismatch("ad of foreign vector");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (x[i] != 0) m = m + ad_[i] * x[i];
  return m;
}

Matrix LieAlgebra::coad_matrix(std::size_t i) const { return -ad_[i].transpose(); }

Matrix LieAlgebra::coad_matrix(const Vector& x) const {
  return -ad_matrix(x).transpose();
}

Matrix LieAlgebra::killing_matrix() const {
  Matrix k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      Rational t = (ad_[i] * ad_[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

Subspace LieAlgebra::center() const {
  // Stack all ad matrices; the kernel of the stack is the center.
  Matrix stacked(dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) stacked(i * dim_ + r, c) = ad_[i](r, c);
  return nullspace(stacked);
}

Subspace LieAlgebra::derived_ideal() const {
  Matrix rows(table_.size(), dim_);
  for (std::size_t t = 0; t < table_.size(); ++t)
    for (std::size_t c = 0; c < dim_; ++c) rows(t, c) = table_[t].coords[c];
  return Subspace(dim_, rows);
}

bool LieAlgebra::is_semisimple() const {
  return inertia(killing_matrix()).n_zero == 0;
}

bool LieAlgebra::is_perfect() const { return derived_ideal().dim() == dim_; }

bool LieAlgebra::same_structure(const LieAlgebra& o) const {
  if (this == &o) return true;
  if (dim_ != o.dim_ || table_.size() != o.table_.size()) return false;
  for (std::size_t k = 0; k < table_.size(); ++k)
    if (table_[k].i != o.table_[k].i || table_[k].j != o.table_[k].j ||
        table_[k].coords != o.table_[k].coords)
      return false;
  return true;
}

Vector bracket(const Vector& x, const Vector& y) {
  const LieAlgebra& g = x.algebra();
  if (!g.same_structure(y.algebra()))
    throw AlgebraMismatch("bracket of vectors from different algebras");
  std::vector<Rational> out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (y[j] == 0) continue;
      auto c = g.bracket_basis(i, j);
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < g.dim(); ++k) out[k] += f * c[k];
    }
  }
  return g.vector(std::move(out));
}

LieAlgebra cotangent(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<LieAlgebra::BracketEntry> table;
  for (const auto& e : g.bracket_table()) {
    std::vector<Rational> c(2 * n);
    std::copy(e.coords.begin(), e.coords.end(), c.begin());
    table.push_back({e.i, e.j, std::move(c)});
  }
  // [e_i, e_a*] = ad*_{e_i} e_a*, coordinates in the dual block.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix coad = g.coad_matrix(i);
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Rational> c(2 * n);
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k) {
        c[n + k] = coad(k, a);
        if (c[n + k] != 0) nonzero = true;
      }
      if (nonzero) table.push_back({i, n + a, std::move(c)});
    }
  }
  std::vector<std::string> labels = g.basis_labels();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(g.basis_labels()[i] + "*");
  LieAlgebra d("T*" + g.name(), 2 * n, std::move(table), std::move(labels));
  // The constructor recognizes the block structure it was just given.
  if (!d.is_cotangent()) throw ConsistencyError("cotangent construction not detected");
  return d;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  std::vector<LieAlgebra::BracketEntry> table;
  for (const auto& e : a.bracket_table()) {
    std::vector<Rational> c(n + m);
    std::copy(e.coords.begin(), e.coords.end(), c.begin());
    table.push_back({e.i, e.j, std::move(c)});
  }
  for (const auto& e : b.bracket_table()) {
    std::vector<Rational> c(n + m);
    std::copy(e.coords.begin(), e.coords.end(), c.begin() + static_cast<std::ptrdiff_t>(n));
    table.push_back({e.i + n, e.j + n, std::move(c)});
  }
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back(l);
  for (const auto& l : b.basis_labels()) labels.push_back(l + "'");
  return LieAlgebra(a.name() + "+" + b.name(), n + m, std::move(table), std::move(labels));
}

}  // namespace liecot
