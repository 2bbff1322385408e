#pragma once

#include <cstdint>
#include <vector>

#include "circ2/dense_matrix.hpp"
#include "circ2/integer.hpp"
#include "circ2/polynomial.hpp"
#include "circ2/rational.hpp"

namespace circ2 {

/*
 * Circ(c_0, ..., c_{n-1}) = c_0 I_n + c_1 P_n + ... + c_{n-1} P_n^{n-1}.
 *
 * Only the first row is stored; entry (i, j) of the dense form is c_{(j - i) mod n}.
 */
class Circulant {
 public:
  /// Throws std::invalid_argument when `coeffs` is empty.
  explicit Circulant(std::vector<Rational> coeffs);

  /// Circ(0, ..., 0) of order n.
  static Circulant zero(std::int64_t n);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::int64_t i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  Circulant scaled(const Rational& factor) const;

  friend bool operator==(const Circulant&, const Circulant&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// a P_n^{s1} + b P_n^{s2} with 0 <= s1 < s2 < n and a, b nonzero.
class TwoParamCirculant {
 public:
  /// Throws std::domain_error when the invariants do not hold.
  TwoParamCirculant(std::int64_t n, std::int64_t s1, std::int64_t s2, Rational a, Rational b);

  std::int64_t n() const { return n_; }
  std::int64_t s1() const { return s1_; }
  std::int64_t s2() const { return s2_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// s2 - s1
  std::int64_t stride() const { return s2_ - s1_; }
  /// (n, s2 - s1): number of diagonal blocks.
  std::int64_t block_count() const { return gcd(n_, stride()); }
  /// n \ (s2 - s1): order of each block.
  std::int64_t block_size() const { return n_ / block_count(); }

  Circulant to_circulant() const;

 private:
  std::int64_t n_, s1_, s2_;
  Rational a_, b_;
};

/// Entry (i, i+s1 mod n) = a, (i, i+s2 mod n) = b, zero elsewhere.
DenseMatrix to_dense(const TwoParamCirculant& t);

DenseMatrix circ_to_dense(const Circulant& c);

/// Row 0 of a square matrix as a Circulant (no check that the matrix is circulant).
Circulant first_row(const DenseMatrix& m);

/// True iff every row is the cyclic right shift of the previous one.
bool is_circulant(const DenseMatrix& m);

/// P_C(x) = sum c_i x^i.
PolynomialQ associated_polynomial(const Circulant& c);

/// n - deg gcd(x^n - 1, P_C(x)).
std::int64_t rank_circulant(const Circulant& c);

}  // namespace circ2
