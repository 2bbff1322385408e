#pragma once

#include <cstdint>
#include <string_view>

#include "circ2/circulant.hpp"
#include "circ2/dense_matrix.hpp"
#include "circ2/rational.hpp"

namespace circ2 {

/// det = (-1)^sign_exponent * base^multiplicity.
struct DetResult {
  Rational value;
  std::int64_t sign_exponent;  // (n - 1) s1
  Rational base;               // a^m - (-b)^m, m = n \ (s2 - s1)
  std::int64_t multiplicity;   // (n, s2 - s1)

  bool singular() const { return base.is_zero(); }
  friend bool operator==(const DetResult&, const DetResult&) = default;
};

enum class GenInverseKind { Inverse, DrazinMinus, DrazinPlus };

std::string_view to_string(GenInverseKind kind);
/// Throws std::invalid_argument for unknown names.
GenInverseKind gen_inverse_kind_from_string(std::string_view name);

/// The matrix scale * Circ(circ). Coefficients off the stride class of s1 are zero.
struct GenInverseResult {
  GenInverseKind kind;
  Circulant circ;
  Rational scale;

  Circulant scaled() const { return circ.scaled(scale); }
  DenseMatrix dense() const { return circ_to_dense(scaled()); }
  friend bool operator==(const GenInverseResult&, const GenInverseResult&) = default;
};

DetResult det_closed(const TwoParamCirculant& t);

/// (a^m + b^m)^{(n, s2 - s1)} with m = n \ (s2 - s1).
Rational perm_closed(const TwoParamCirculant& t);

/*
 * rho_{n,s}(i) = (-1)^pos * delta_{0, cyc} * b^pos * a^{n\s - 1 - pos},
 * pos and cyc taken at (n, s2 - s1). The index is reduced mod n, so
 * callers may pass i + s1 directly.
 */
Rational rho(const TwoParamCirculant& t, std::int64_t i);

/// Throws std::domain_error("singular: use drazin_closed") when det is zero.
GenInverseResult inverse_closed(const TwoParamCirculant& t);

/// delta_{0, cyc(i)} (n\s - 2 pos(i) - 1); index reduced mod n.
Rational rho_star(std::int64_t n, std::int64_t s, std::int64_t i);

/*
 * Group inverse of a singular two-parameter circulant. Over Q singularity
 * means b = -a (any n\s) or b = a with n\s even.
 *
 *   b = -a: (1 / (2 a m)) sum_i rho*(i + s1) P_n^i
 *   b =  a: (1 / (2 a m)) sum_i (-1)^{pos(i + s1)} rho*(i + s1) P_n^i
 *
 * Throws std::domain_error("nonsingular: use inverse_closed") otherwise.
 */
GenInverseResult drazin_closed(const TwoParamCirculant& t);

/// (a I_n - a P_n)^D = (1 / (2 a n)) Circ(n - 1, n - 3, ..., 1 - n). Requires n >= 2, a != 0.
Circulant base_drazin_minus(std::int64_t n, const Rational& a);

/// (a I_m + a P_m)^D = (1 / (2 a m)) Circ((-1)^i (m - 2i - 1)); m must be even.
Circulant base_drazin_plus(std::int64_t m, const Rational& a);

/// AD = DA, A^{k+1} D = A^k, DAD = D, exactly. Throws std::invalid_argument on size mismatch.
bool drazin_axioms_check(const DenseMatrix& a, const DenseMatrix& d, std::int64_t k = 1);

}  // namespace circ2
