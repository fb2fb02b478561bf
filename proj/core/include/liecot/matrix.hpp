#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "liecot/rational.hpp"

namespace liecot {

// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Rational>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  // Row-major flattening; the coordinate system every OperatorSpace uses.
  std::vector<Rational> flatten() const { return data_; }
  static Matrix unflatten(std::size_t rows, std::size_t cols,
                          const std::vector<Rational>& flat);

  // Matrix commutator a*b - b*a.
  friend Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace liecot
