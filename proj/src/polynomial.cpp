#include "circ2/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace circ2 {

PolynomialQ::PolynomialQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void PolynomialQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolynomialQ PolynomialQ::x_pow_minus_one(std::int64_t n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c.front() = -1;
  c.back() += 1;
  return PolynomialQ(std::move(c));
}

PolynomialQ PolynomialQ::monic() const {
  if (is_zero()) return *this;
  const Rational inv = leading().reciprocal();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return PolynomialQ(std::move(c));
}

Rational PolynomialQ::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolynomialQ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolynomialQ poly_rem(const PolynomialQ& a, const PolynomialQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  const Rational lead_inv = b.leading().reciprocal();
  while (r.size() > db && !r.empty()) {
    if (r.back().is_zero()) {
      r.pop_back();
      continue;
    }
    const Rational factor = r.back() * lead_inv;
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= factor * d[k];
    r.pop_back();
  }
  return PolynomialQ(std::move(r));
}

PolynomialQ poly_gcd(PolynomialQ a, PolynomialQ b) {
  while (!b.is_zero()) {
    PolynomialQ r = poly_rem(a, b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace circ2
