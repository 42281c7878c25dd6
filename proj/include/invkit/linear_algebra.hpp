#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "invkit/scalar.hpp"

namespace invkit {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols, const Field& field = {});
  /// From nested rows; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& field = {});
  static RationalMatrix identity(std::size_t n, const Field& field = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Scalar& c) const;
  Vector apply(const Vector& v) const;
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  std::size_t rank() const;
  /// Basis of {v : M v = 0}; linearly independent, dimension cols - rank.
  std::vector<Vector> nullspace() const;
  Scalar determinant() const;
  bool is_invertible() const;
  RationalMatrix inverse() const;
  /// Determinant of the submatrix on the given rows and columns.
  Scalar minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Sparse vector: (column, nonzero value) pairs sorted by column.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Incrementally built row-echelon basis of a subspace of F^n. Every stored
/// row has a distinct pivot column carrying coefficient one, and is reduced
/// against the rows that existed when it was inserted.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols, const Field& field = {});

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  /// Adds a vector; returns true when it enlarged the span.
  bool insert(const SparseVector& v);
  /// Residual of v after subtracting its projection onto pivot columns; zero
  /// iff v lies in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  std::vector<std::size_t> pivot_columns() const;
  std::vector<std::size_t> free_columns() const;

  /// Basis of the solution space {x : r.x = 0 for all inserted rows r}, one
  /// vector per free column (value one there).
  std::vector<SparseVector> kernel() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  SparseVector reduce_dense(const SparseVector& v) const;

  std::size_t cols_;
  Field field_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_row_;
  mutable std::vector<Scalar> work_;
};

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n, const Field& field = {});

}  // namespace invkit
