#include "circ2/dense_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circ2 {

DenseMatrix::DenseMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

DenseMatrix::DenseMatrix(std::int64_t rows, std::int64_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("entries length does not match rows*cols");
  }
}

DenseMatrix DenseMatrix::identity(std::int64_t n) {
  DenseMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::int64_t i = 0; i < rows_; ++i)
    for (std::int64_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

DenseMatrix DenseMatrix::kron_identity(std::int64_t copies, const DenseMatrix& block) {
  const std::int64_t br = block.rows(), bc = block.cols();
  DenseMatrix m(copies * br, copies * bc);
  for (std::int64_t k = 0; k < copies; ++k)
    for (std::int64_t i = 0; i < br; ++i)
      for (std::int64_t j = 0; j < bc; ++j) m(k * br + i, k * bc + j) = block(i, j);
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix size mismatch");
  DenseMatrix out(lhs.rows(), rhs.cols());
  for (std::int64_t i = 0; i < lhs.rows(); ++i) {
    for (std::int64_t k = 0; k < lhs.cols(); ++k) {
      const Rational& x = lhs(i, k);
      if (x.is_zero()) continue;
      for (std::int64_t j = 0; j < rhs.cols(); ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += x * rhs(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> DenseMatrix::apply(std::span<const Rational> v) const {
  if (static_cast<std::int64_t>(v.size()) != cols_) {
    throw std::invalid_argument("vector length does not match matrix columns");
  }
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (std::int64_t i = 0; i < rows_; ++i)
    for (std::int64_t j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& e : m.entries()) {
    cells.push_back(e.to_string());
    width = std::max(width, cells.back().size());
  }
  for (std::int64_t i = 0; i < m.rows(); ++i) {
    for (std::int64_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[static_cast<std::size_t>(i * m.cols() + j)];
      os << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    os << '\n';
  }
  return os;
}

}  // namespace circ2
