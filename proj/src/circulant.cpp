#include "circ2/circulant.hpp"

#include <stdexcept>
#include <string>

namespace circ2 {

Circulant::Circulant(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("circulant of order 0");
}

Circulant Circulant::zero(std::int64_t n) {
  return Circulant(std::vector<Rational>(static_cast<std::size_t>(n)));
}

Circulant Circulant::scaled(const Rational& factor) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= factor;
  return Circulant(std::move(c));
}

TwoParamCirculant::TwoParamCirculant(std::int64_t n, std::int64_t s1, std::int64_t s2, Rational a,
                                     Rational b)
    : n_(n), s1_(s1), s2_(s2), a_(std::move(a)), b_(std::move(b)) {
  if (!(0 <= s1_ && s1_ < s2_ && s2_ < n_)) {
    throw std::domain_error("expected 0 <= s1 < s2 < n (got n=" + std::to_string(n_) +
                            ", s1=" + std::to_string(s1_) + ", s2=" + std::to_string(s2_) + ")");
  }
  if (a_.is_zero() || b_.is_zero()) throw std::domain_error("a and b must be nonzero");
}

Circulant TwoParamCirculant::to_circulant() const {
  std::vector<Rational> c(static_cast<std::size_t>(n_));
  c[static_cast<std::size_t>(s1_)] = a_;
  c[static_cast<std::size_t>(s2_)] = b_;
  return Circulant(std::move(c));
}

DenseMatrix to_dense(const TwoParamCirculant& t) {
  const std::int64_t n = t.n();
  DenseMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) {
    m(i, mod(i + t.s1(), n)) = t.a();
    m(i, mod(i + t.s2(), n)) = t.b();
  }
  return m;
}

DenseMatrix circ_to_dense(const Circulant& c) {
  const std::int64_t n = c.order();
  DenseMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) m(i, j) = c[mod(j - i, n)];
  return m;
}

Circulant first_row(const DenseMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("first_row needs a square matrix");
  auto r = m.row(0);
  return Circulant(std::vector<Rational>(r.begin(), r.end()));
}

bool is_circulant(const DenseMatrix& m) {
  if (!m.is_square()) return false;
  const std::int64_t n = m.rows();
  for (std::int64_t i = 1; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (m(i, j) != m(i - 1, mod(j - 1, n))) return false;
  return true;
}

PolynomialQ associated_polynomial(const Circulant& c) {
  return PolynomialQ(c.coeffs());
}

std::int64_t rank_circulant(const Circulant& c) {
  const std::int64_t n = c.order();
  const PolynomialQ g = poly_gcd(PolynomialQ::x_pow_minus_one(n), associated_polynomial(c));
  return n - g.degree();
}

}  // namespace circ2
