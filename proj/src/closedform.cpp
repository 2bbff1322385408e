#include "circ2/closedform.hpp"

#include <stdexcept>
#include <string>

#include "circ2/integer.hpp"
#include "circ2/untangle.hpp"

namespace circ2 {

namespace {

Rational sign_power(std::int64_t e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational singular_base(const TwoParamCirculant& t) {
  const std::int64_t m = t.block_size();
  return t.a().pow(m) - (-t.b()).pow(m);
}

DenseMatrix matrix_power(const DenseMatrix& a, std::int64_t k) {
  DenseMatrix out = DenseMatrix::identity(a.rows());
  for (std::int64_t i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace

std::string_view to_string(GenInverseKind kind) {
  switch (kind) {
    case GenInverseKind::Inverse: return "inverse";
    case GenInverseKind::DrazinMinus: return "drazin_minus";
    case GenInverseKind::DrazinPlus: return "drazin_plus";
  }
  return "unknown";
}

GenInverseKind gen_inverse_kind_from_string(std::string_view name) {
  if (name == "inverse") return GenInverseKind::Inverse;
  if (name == "drazin_minus") return GenInverseKind::DrazinMinus;
  if (name == "drazin_plus") return GenInverseKind::DrazinPlus;
  throw std::invalid_argument("unknown inverse kind '" + std::string(name) + "'");
}

DetResult det_closed(const TwoParamCirculant& t) {
  const std::int64_t sign_exponent = (t.n() - 1) * t.s1();
  const Rational base = singular_base(t);
  const std::int64_t g = t.block_count();
  return {sign_power(sign_exponent) * base.pow(g), sign_exponent, base, g};
}

Rational perm_closed(const TwoParamCirculant& t) {
  const std::int64_t m = t.block_size();
  return (t.a().pow(m) + t.b().pow(m)).pow(t.block_count());
}

Rational rho(const TwoParamCirculant& t, std::int64_t i) {
  const std::int64_t n = t.n(), s = t.stride();
  if (cyc(n, s, i) != 0) return 0;
  const std::int64_t p = pos(n, s, i);
  return sign_power(p) * t.b().pow(p) * t.a().pow(t.block_size() - 1 - p);
}

GenInverseResult inverse_closed(const TwoParamCirculant& t) {
  const Rational base = singular_base(t);
  if (base.is_zero()) throw std::domain_error("singular: use drazin_closed");
  std::vector<Rational> c(static_cast<std::size_t>(t.n()));
  for (std::int64_t i = 0; i < t.n(); ++i) c[static_cast<std::size_t>(i)] = rho(t, i + t.s1());
  return {GenInverseKind::Inverse, Circulant(std::move(c)), base.reciprocal()};
}

Rational rho_star(std::int64_t n, std::int64_t s, std::int64_t i) {
  if (cyc(n, s, i) != 0) return 0;
  return n_without_s(n, s) - 2 * pos(n, s, i) - 1;
}

GenInverseResult drazin_closed(const TwoParamCirculant& t) {
  if (!singular_base(t).is_zero()) throw std::domain_error("nonsingular: use inverse_closed");
  const std::int64_t n = t.n(), s = t.stride(), m = t.block_size();

  GenInverseKind kind;
  if (t.b() == -t.a()) {
    kind = GenInverseKind::DrazinMinus;
  } else if (t.b() == t.a() && m % 2 == 0) {
    kind = GenInverseKind::DrazinPlus;
  } else {
    throw std::logic_error("singular two-parameter circulant with b != +-a");
  }

  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    Rational v = rho_star(n, s, i + t.s1());
    if (kind == GenInverseKind::DrazinPlus) v *= sign_power(pos(n, s, i + t.s1()));
    c[static_cast<std::size_t>(i)] = v;
  }
  return {kind, Circulant(std::move(c)), (Rational(2 * m) * t.a()).reciprocal()};
}

Circulant base_drazin_minus(std::int64_t n, const Rational& a) {
  if (n < 2) throw std::domain_error("base_drazin_minus requires n >= 2");
  if (a.is_zero()) throw std::domain_error("a must be nonzero");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = n - 2 * i - 1;
  return Circulant(std::move(c)).scaled((Rational(2 * n) * a).reciprocal());
}

Circulant base_drazin_plus(std::int64_t m, const Rational& a) {
  if (m < 2 || m % 2 != 0) {
    throw std::domain_error("base_drazin_plus requires even order (a I + a P is nonsingular otherwise)");
  }
  if (a.is_zero()) throw std::domain_error("a must be nonzero");
  std::vector<Rational> c(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = sign_power(i) * Rational(m - 2 * i - 1);
  // 1/(4a(m/2)) = 1/(2am)
  return Circulant(std::move(c)).scaled((Rational(2 * m) * a).reciprocal());
}

bool drazin_axioms_check(const DenseMatrix& a, const DenseMatrix& d, std::int64_t k) {
  if (!a.is_square() || !d.is_square() || a.rows() != d.rows()) {
    throw std::invalid_argument("drazin_axioms_check needs square matrices of equal size");
  }
  if (k < 1) throw std::invalid_argument("index must be positive");
  const DenseMatrix ad = a * d;
  if (ad != d * a) return false;
  const DenseMatrix ak = matrix_power(a, k);
  if (ak * ad != ak) return false;
  return d * ad == d;
}

}  // namespace circ2
