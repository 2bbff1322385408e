#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "circ2/rational.hpp"

namespace circ2 {

/// Row-major exact matrix. Used for oracles and for materializing formulas.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::int64_t rows, std::int64_t cols);
  DenseMatrix(std::int64_t rows, std::int64_t cols, std::vector<Rational> entries);

  static DenseMatrix identity(std::int64_t n);
  static DenseMatrix zero(std::int64_t rows, std::int64_t cols) { return {rows, cols}; }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::int64_t i, std::int64_t j) { return entries_[index(i, j)]; }
  const Rational& operator()(std::int64_t i, std::int64_t j) const { return entries_[index(i, j)]; }

  std::span<const Rational> row(std::int64_t i) const {
    return {entries_.data() + i * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  DenseMatrix transpose() const;
  bool is_zero() const;

  /// Block-diagonal I_copies (x) block.
  static DenseMatrix kron_identity(std::int64_t copies, const DenseMatrix& block);

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(const Rational& scalar);

  friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
  friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
  friend DenseMatrix operator*(DenseMatrix lhs, const Rational& s) { return lhs *= s; }
  friend DenseMatrix operator*(const Rational& s, DenseMatrix rhs) { return rhs *= s; }
  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

  /// Matrix-vector product.
  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

 private:
  std::size_t index(std::int64_t i, std::int64_t j) const {
    return static_cast<std::size_t>(i * cols_ + j);
  }

  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace circ2
