#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "circ2/dense_matrix.hpp"
#include "circ2/rational.hpp"

// Dense exact reference implementations. Nothing here knows about circulant
// structure; these are the ground truth the closed formulas are tested against.

namespace circ2 {

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError(std::int64_t rank, std::int64_t order);
  std::int64_t rank() const { return rank_; }

 private:
  std::int64_t rank_;
};

/// Raised when a group inverse is requested for a matrix of index > 1.
class IndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ryser's formula is used up to this order.
inline constexpr std::int64_t kMaxPermanentOrder = 20;
inline constexpr std::int64_t kMaxCofactorOrder = 8;

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational det_oracle(const DenseMatrix& a);

/// Laplace expansion along the first row; limited to kMaxCofactorOrder.
Rational det_cofactor(const DenseMatrix& a);

/// Ryser's inclusion-exclusion formula; throws std::length_error above kMaxPermanentOrder.
Rational perm_oracle(const DenseMatrix& a);

struct RowEchelon {
  DenseMatrix reduced;               // reduced row echelon form
  std::vector<std::int64_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan with the first nonzero entry as pivot.
RowEchelon rref(const DenseMatrix& a);

std::int64_t rank_oracle(const DenseMatrix& a);

/// Gauss-Jordan on [A | I]; throws SingularMatrixError carrying the rank.
DenseMatrix inverse_oracle(const DenseMatrix& a);

/// A = F G with F = pivot columns of A and G = nonzero rows of rref(A).
struct RankFactorization {
  DenseMatrix f;  // n x r
  DenseMatrix g;  // r x n
};

RankFactorization rank_factorization(const DenseMatrix& a);

/// A^# = F (G F)^{-2} G; throws IndexError when G F is singular.
DenseMatrix group_inverse_oracle(const DenseMatrix& a);

/// Basis of {v : A v = 0}, one vector per free column of rref(A).
std::vector<std::vector<Rational>> null_space_basis(const DenseMatrix& a);

/// True iff A v = 0; throws std::invalid_argument on dimension mismatch.
bool null_contains(const DenseMatrix& a, std::span<const Rational> v);

/// Smallest k >= 0 with rank(A^k) = rank(A^{k+1}).
std::int64_t matrix_index(const DenseMatrix& a);

}  // namespace circ2
