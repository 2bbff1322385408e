#include "circ2/oracle.hpp"

#include <string>
#include <utility>

namespace circ2 {

SingularMatrixError::SingularMatrixError(std::int64_t rank, std::int64_t order)
    : std::domain_error("singular matrix: rank " + std::to_string(rank) + " < " + std::to_string(order)),
      rank_(rank) {}

namespace {

void require_square(const DenseMatrix& a, const char* what) {
  if (!a.is_square()) throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

}  // namespace

Rational det_oracle(const DenseMatrix& a) {
  require_square(a, "det_oracle");
  const std::int64_t n = a.rows();
  if (n == 0) return 1;

  // Scale each row to integers; det(A) = det(M) / prod(row scales).
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  mpz_class scale = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::int64_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
    scale *= l;
    for (std::int64_t j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j).num() * (l / a(i, j).den());
    }
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m.size() && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == m.size()) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m.size(); ++i) {
      for (std::size_t j = k + 1; j < m.size(); ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  const mpz_class& last = m.back().back();
  return Rational(sign * last, scale);
}

Rational det_cofactor(const DenseMatrix& a) {
  require_square(a, "det_cofactor");
  const std::int64_t n = a.rows();
  if (n > kMaxCofactorOrder) throw std::length_error("cofactor expansion limited to small orders");
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational det;
  for (std::int64_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    DenseMatrix minor(n - 1, n - 1);
    for (std::int64_t i = 1; i < n; ++i)
      for (std::int64_t c = 0, mc = 0; c < n; ++c)
        if (c != j) minor(i - 1, mc++) = a(i, c);
    const Rational term = a(0, j) * det_cofactor(minor);
    if (j % 2 == 0) det += term; else det -= term;
  }
  return det;
}

Rational perm_oracle(const DenseMatrix& a) {
  require_square(a, "perm_oracle");
  const std::int64_t n = a.rows();
  if (n > kMaxPermanentOrder) throw std::length_error("permanent too large");
  if (n == 0) return 1;

  // Gray-code walk over column subsets S, keeping the row sums over S.
  std::vector<Rational> row_sums(static_cast<std::size_t>(n));
  Rational total;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int bit = __builtin_ctzll(k);
    const std::uint64_t next = gray ^ (std::uint64_t{1} << bit);
    const bool added = next > gray;
    gray = next;
    for (std::int64_t i = 0; i < n; ++i) {
      if (added) row_sums[static_cast<std::size_t>(i)] += a(i, bit);
      else row_sums[static_cast<std::size_t>(i)] -= a(i, bit);
    }
    Rational prod = 1;
    for (const auto& r : row_sums) {
      if (r.is_zero()) { prod = 0; break; }
      prod *= r;
    }
    if (__builtin_popcountll(gray) % 2 == 0) total += prod; else total -= prod;
  }
  return (n % 2 == 0) ? total : -total;
}

RowEchelon rref(const DenseMatrix& a) {
  DenseMatrix r = a;
  std::vector<std::int64_t> pivots;
  std::int64_t row = 0;
  for (std::int64_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::int64_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::int64_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    const Rational inv = r(row, col).reciprocal();
    for (std::int64_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::int64_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Rational f = r(i, col);
      for (std::int64_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::int64_t rank_oracle(const DenseMatrix& a) {
  return static_cast<std::int64_t>(rref(a).pivots.size());
}

DenseMatrix inverse_oracle(const DenseMatrix& a) {
  require_square(a, "inverse_oracle");
  const std::int64_t n = a.rows();
  DenseMatrix aug(n, 2 * n);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  std::int64_t rank = 0;
  for (std::int64_t p : e.pivots) if (p < n) ++rank;
  if (rank < n) throw SingularMatrixError(rank, n);
  DenseMatrix inv(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

RankFactorization rank_factorization(const DenseMatrix& a) {
  RowEchelon e = rref(a);
  const auto r = static_cast<std::int64_t>(e.pivots.size());
  DenseMatrix f(a.rows(), r), g(r, a.cols());
  for (std::int64_t k = 0; k < r; ++k) {
    for (std::int64_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, e.pivots[static_cast<std::size_t>(k)]);
    for (std::int64_t j = 0; j < a.cols(); ++j) g(k, j) = e.reduced(k, j);
  }
  return {std::move(f), std::move(g)};
}

DenseMatrix group_inverse_oracle(const DenseMatrix& a) {
  require_square(a, "group_inverse_oracle");
  RankFactorization rf = rank_factorization(a);
  if (rf.g.rows() == 0) return DenseMatrix(a.rows(), a.cols());
  DenseMatrix gf_inv;
  try {
    gf_inv = inverse_oracle(rf.g * rf.f);
  } catch (const SingularMatrixError&) {
    throw IndexError("index > 1: GF is singular, no group inverse");
  }
  return rf.f * (gf_inv * gf_inv) * rf.g;
}

std::vector<std::vector<Rational>> null_space_basis(const DenseMatrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (std::int64_t p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::int64_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      v[static_cast<std::size_t>(e.pivots[k])] = -e.reduced(static_cast<std::int64_t>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool null_contains(const DenseMatrix& a, std::span<const Rational> v) {
  for (const auto& x : a.apply(v)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::int64_t matrix_index(const DenseMatrix& a) {
  require_square(a, "matrix_index");
  DenseMatrix power = DenseMatrix::identity(a.rows());
  std::int64_t rank = a.rows();
  for (std::int64_t k = 0;; ++k) {
    DenseMatrix next = power * a;
    const std::int64_t next_rank = rank_oracle(next);
    if (next_rank == rank) return k;
    power = std::move(next);
    rank = next_rank;
  }
}

}  // namespace circ2
