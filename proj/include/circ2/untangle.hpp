#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "circ2/circulant.hpp"
#include "circ2/dense_matrix.hpp"
#include "circ2/integer.hpp"
#include "circ2/permutation.hpp"

// Block-diagonalization of stride-s circulants.
//
// The digraph of a I_n + b P_n^s splits into (n,s) cycles of length n\s.
// Vertices are placed on the cylinder [(n,s)] x Z_{n\s} in two ways:
//   F embeds i by (main cycle, position along the stride-s walk);
//   J embeds i by (block, position inside the block of nu_{n,s}).
// The conjugator sigma_{n,s} is assembled from these embeddings.

namespace circ2 {

struct CylinderPoint {
  std::int64_t c;  // in [0, (n,s))
  std::int64_t p;  // in [0, n\s)

  friend bool operator==(const CylinderPoint&, const CylinderPoint&) = default;
};

/// R(n,s,i) = { (i + k s) mod n : k in Z }.
std::set<std::int64_t> reach_set(std::int64_t n, std::int64_t s, std::int64_t i);

/// nu_{n,s}: (n,s) descending cycles of length n\s over consecutive blocks,
/// so that P_nu = I_{(n,s)} (x) P_{n\s}.
Permutation nu(std::int64_t n, std::int64_t s);

/// floor(i / (n\s)) for i in [0, n); throws std::domain_error otherwise.
std::int64_t rho_index(std::int64_t n, std::int64_t s, std::int64_t i);

/// ((rho_index(i) + 1)(n\s) - i) mod n\s for i in [0, n); throws std::domain_error otherwise.
std::int64_t ell(std::int64_t n, std::int64_t s, std::int64_t i);

/// i mod (n,s); i is first reduced mod n.
std::int64_t cyc(std::int64_t n, std::int64_t s, std::int64_t i);

/// The unique x in [0, n\s) with s x = i - cyc(i) (mod n); i is first reduced mod n.
std::int64_t pos(std::int64_t n, std::int64_t s, std::int64_t i);

CylinderPoint J_embed(std::int64_t n, std::int64_t s, std::int64_t i);
std::int64_t J_inv(std::int64_t n, std::int64_t s, CylinderPoint cp);
CylinderPoint F_embed(std::int64_t n, std::int64_t s, std::int64_t i);
std::int64_t F_inv(std::int64_t n, std::int64_t s, CylinderPoint cp);

/// (c, p) -> (c, (p - 1) mod n\s)
CylinderPoint shift(std::int64_t n, std::int64_t s, CylinderPoint cp);
/// (c, p) -> (c, (p + 1) mod n\s)
CylinderPoint shift_back(std::int64_t n, std::int64_t s, CylinderPoint cp);
/// (c, p) -> (c, (-p) mod n\s)
CylinderPoint reflect(std::int64_t n, std::int64_t s, CylinderPoint cp);

struct UntangleResult {
  Permutation sigma;
  Permutation nu;
  std::int64_t block_count;  // (n,s)
  std::int64_t block_size;   // n\s
};

/*
 * sigma_{n,s}(i) = F_inv(reflect(J_embed(i))), with inverse J_inv o reflect o F_embed.
 *
 * It satisfies sigma^-1 o tau_n^s o sigma = nu_{n,s}, i.e.
 * P_sigma^T P_n^s P_sigma = I_{(n,s)} (x) P_{n\s}.
 *
 * The reflection is required: F_inv o J_embed alone conjugates tau_n^{n-s}
 * (not tau_n^s) to nu_{n,s}, because ell counts block positions downwards.
 */
UntangleResult sigma(std::int64_t n, std::int64_t s);

/// Permutes rows and columns: result(i, j) = m(alpha(i), alpha(j)), i.e. P_alpha^T m P_alpha.
DenseMatrix conjugate_by(const DenseMatrix& m, const Permutation& alpha);

/*
 * a P_n^{s1} + b P_n^{s2} = P_n^{s1} P_sigma [I_g (x) Circ(a, b, 0, ..., 0)] P_sigma^T
 * with sigma = sigma_{n, s2-s1} and g = (n, s2-s1).
 */
struct BlockDiagonalization {
  Permutation sigma;
  std::int64_t block_count;
  Circulant block;  // of order n \ (s2 - s1)
  std::int64_t s1;  // left factor P_n^{s1}

  /// I_g (x) block, materialized.
  DenseMatrix block_diagonal() const;
  /// P_n^{s1} P_sigma [I_g (x) block] P_sigma^T.
  DenseMatrix reconstruct() const;
};

BlockDiagonalization block_diagonalize(const TwoParamCirculant& t);

/// P_sigma^T P_n^{n - s1} A P_sigma computed by index arithmetic; equals I_g (x) (a I + b P).
DenseMatrix untangled_dense(const TwoParamCirculant& t);

/// sum_k coeffs[k] P_n^{k s}, with coeffs of length n\s.
DenseMatrix stride_polynomial_dense(std::int64_t n, std::int64_t s, const std::vector<Rational>& coeffs);

/*
 * P_sigma^-1 (sum_k a_k P_n^{k s}) P_sigma = I_{(n,s)} (x) Circ(a_0, ..., a_{n\s - 1}).
 * Throws std::invalid_argument unless coeffs has length n\s.
 */
BlockDiagonalization untangle_poly(std::int64_t n, std::int64_t s, const std::vector<Rational>& coeffs);

}  // namespace circ2
