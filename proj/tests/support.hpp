#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "circ2/dense_matrix.hpp"
#include "circ2/permutation.hpp"
#include "circ2/rational.hpp"

// Test-only reference code, deliberately independent of src/.

namespace circ2::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2c1cULL);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational small_rational(std::int64_t bound = 5) {
  return Rational(mpz_class(static_cast<long>(uniform(-bound, bound))),
                  mpz_class(static_cast<long>(uniform(1, bound))));
}

inline Rational nonzero_rational(std::int64_t bound = 5) {
  for (;;) {
    Rational r = small_rational(bound);
    if (!r.is_zero()) return r;
  }
}

inline DenseMatrix random_matrix(std::int64_t rows, std::int64_t cols, std::int64_t bound = 5) {
  DenseMatrix m(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < cols; ++j) m(i, j) = small_rational(bound);
  return m;
}

inline Permutation random_permutation(std::int64_t n) {
  std::vector<std::int64_t> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(std::move(images));
}

inline int permutation_sign(const std::vector<std::int64_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz sum over all n! permutations.
inline Rational leibniz_det(const DenseMatrix& a) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(a.rows()));
  std::iota(p.begin(), p.end(), 0);
  Rational det;
  do {
    Rational term = permutation_sign(p);
    for (std::int64_t i = 0; i < a.rows() && !term.is_zero(); ++i) term *= a(i, p[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

/// Sum over all n! permutations without signs.
inline Rational brute_perm(const DenseMatrix& a) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(a.rows()));
  std::iota(p.begin(), p.end(), 0);
  Rational perm;
  do {
    Rational term = 1;
    for (std::int64_t i = 0; i < a.rows() && !term.is_zero(); ++i) term *= a(i, p[static_cast<std::size_t>(i)]);
    perm += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return perm;
}

/// P_n^k built straight from the definition (P_n)_{i, i+1} = 1.
inline DenseMatrix shift_power(std::int64_t n, std::int64_t k) {
  DenseMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m(i, ((i + k) % n + n) % n) = 1;
  return m;
}

inline std::vector<Rational> rationals(std::initializer_list<Rational> xs) { return {xs}; }

}  // namespace circ2::testing
