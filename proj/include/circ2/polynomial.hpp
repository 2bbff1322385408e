#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circ2/rational.hpp"

namespace circ2 {

/// Univariate polynomial over Q, coefficients lowest degree first, no trailing zeros.
class PolynomialQ {
 public:
  PolynomialQ() = default;
  explicit PolynomialQ(std::vector<Rational> coefficients);

  /// x^n - 1
  static PolynomialQ x_pow_minus_one(std::int64_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  PolynomialQ monic() const;
  Rational evaluate(const Rational& x) const;
  std::string to_string() const;

  friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Remainder of a divided by b; b must be nonzero.
PolynomialQ poly_rem(const PolynomialQ& a, const PolynomialQ& b);

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
PolynomialQ poly_gcd(PolynomialQ a, PolynomialQ b);

}  // namespace circ2
