#pragma once

#include <optional>
#include <vector>

#include "kci/field.hpp"

namespace kci {

/// Dense row-major matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Coeff p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

  static DenseMatrix identity(Coeff p, int n);

  Coeff modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Coeff& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  Coeff operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  std::vector<Coeff> row(int i) const;
  std::vector<Coeff> column(int j) const;

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix scaled(Coeff c) const;
  std::vector<Coeff> apply(const std::vector<Coeff>& x) const;
  DenseMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const DenseMatrix& o) const = default;

  /// Columns stacked side by side.
  static DenseMatrix from_columns(Coeff p, int rows, const std::vector<std::vector<Coeff>>& cols);
  DenseMatrix hconcat(const DenseMatrix& o) const;

 private:
  Coeff p_ = kDefaultPrime;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Coeff> a_;
};

/// In-place reduced row echelon form; returns pivot columns in order.
std::vector<int> rref(DenseMatrix& m);

int rank(DenseMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Coeff>> nullspace(const DenseMatrix& m);

/// Some x with m x = b, or nothing.
std::optional<std::vector<Coeff>> solve(const DenseMatrix& m, const std::vector<Coeff>& b);

/// Incrementally maintained span of vectors of fixed length. Rows are kept
/// reduced against each other's pivots, so membership and reduction are a
/// single pass.
class Span {
 public:
  Span(Coeff p, int dim) : p_(p), dim_(dim) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }
  /// v minus its projection onto the span along pivots.
  std::vector<Coeff> reduce(std::vector<Coeff> v) const;
  bool contains(const std::vector<Coeff>& v) const;
  /// Adds v; returns false if it was already in the span.
  bool insert(std::vector<Coeff> v);
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  Coeff p_;
  int dim_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<int> pivots_;
};

}  // namespace kci
