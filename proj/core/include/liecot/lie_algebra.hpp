#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecot/linalg.hpp"
#include "liecot/matrix.hpp"

namespace liecot {

class LieAlgebra;

// Coordinate vector against the basis of a fixed algebra. Dual vectors of a
// cotangent algebra are ordinary vectors supported on the dual half of the
// basis; there is no separate dual-algebra type.
class Vector {
 public:
  Vector(const LieAlgebra& algebra, std::vector<Rational> coords);

  const LieAlgebra& algebra() const { return *alg_; }
  const std::vector<Rational>& coords() const { return coords_; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dim() const { return coords_.size(); }
  bool is_zero() const;
  bool operator==(const Vector& o) const;

 private:
  const LieAlgebra* alg_;
  std::vector<Rational> coords_;
};

// A finite-dimensional Lie algebra given by its structure constants
// c_{ij}^k, stored for i < j only; antisymmetry holds by convention and the
// Jacobi identity is checked at construction.
class LieAlgebra {
 public:
  // brackets[(i,j)] = coords of [e_i, e_j], i < j, zero pairs omitted.
  // Indices are 0-based here; the JSON interface is 1-based.
  struct BracketEntry {
    std::size_t i, j;
    std::vector<Rational> coords;
  };

  LieAlgebra(std::string name, std::size_t dim, std::vector<BracketEntry> brackets,
             std::vector<std::string> basis_labels = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  // Coordinates of [e_i, e_j] for any i, j (antisymmetric extension).
  std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;
  const std::vector<BracketEntry>& bracket_table() const { return table_; }

  Vector vector(std::vector<Rational> coords) const;
  Vector basis_vector(std::size_t i) const;
  Vector zero_vector() const;

  Matrix ad_matrix(std::size_t basis_index) const { return ad_[basis_index]; }
  Matrix ad_matrix(const Vector& x) const;
  Matrix coad_matrix(std::size_t basis_index) const;
  Matrix coad_matrix(const Vector& x) const;

  Matrix killing_matrix() const;

  Subspace center() const;
  Subspace derived_ideal() const;
  bool is_semisimple() const;
  bool is_perfect() const;

  // Set when the basis exhibits the cotangent block structure: the first
  // half closes under the bracket, the second half is an abelian ideal, and
  // the mixed brackets are the coadjoint action of the first half. Detected
  // structurally at construction, so it survives serialization.
  std::optional<std::size_t> cotangent_base_dim() const { return cotangent_base_; }
  bool is_cotangent() const { return cotangent_base_.has_value(); }

  // Structural equality: same dimension and structure constants.
  bool same_structure(const LieAlgebra& o) const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<BracketEntry> table_;  // sorted by (i, j), i < j
  std::vector<std::string> labels_;
  std::vector<Matrix> ad_;  // ad(e_i), precomputed
  std::optional<std::size_t> cotangent_base_;

  void validate_jacobi() const;
  void detect_cotangent_structure();
};

Vector bracket(const Vector& x, const Vector& y);

// Cotangent algebra T*g on basis (e_1..e_n, e_1*..e_n*) with
// [(x,f),(y,g)] = ([x,y], ad*_x g - ad*_y f); g* is an abelian ideal.
LieAlgebra cotangent(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liecot
