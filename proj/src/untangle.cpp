#include "circ2/untangle.hpp"

#include <stdexcept>
#include <string>

namespace circ2 {

namespace {

void require_vertex(std::int64_t n, std::int64_t i) {
  if (i < 0 || i >= n) {
    throw std::domain_error("vertex " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
  }
}

void require_point(const IntPair& ns, CylinderPoint cp) {
  if (cp.c < 0 || cp.c >= ns.gcd() || cp.p < 0 || cp.p >= ns.without()) {
    throw std::domain_error("cylinder point (" + std::to_string(cp.c) + ", " + std::to_string(cp.p) +
                            ") out of range");
  }
}

}  // namespace

std::set<std::int64_t> reach_set(std::int64_t n, std::int64_t s, std::int64_t i) {
  const IntPair ns(n, s);
  std::set<std::int64_t> out;
  for (std::int64_t k = 0; k < ns.without(); ++k) out.insert(mod(i + k * s, n));
  return out;
}

Permutation nu(std::int64_t n, std::int64_t s) {
  const IntPair ns(n, s);
  const std::int64_t m = ns.without();
  std::vector<std::int64_t> images(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t base = i - mod(i, m);
    images[static_cast<std::size_t>(i)] = base + mod(i - 1, m);
  }
  return Permutation(std::move(images));
}

std::int64_t rho_index(std::int64_t n, std::int64_t s, std::int64_t i) {
  const IntPair ns(n, s);
  require_vertex(n, i);
  return i / ns.without();
}

std::int64_t ell(std::int64_t n, std::int64_t s, std::int64_t i) {
  const IntPair ns(n, s);
  const std::int64_t m = ns.without();
  return mod((rho_index(n, s, i) + 1) * m - i, m);
}

std::int64_t cyc(std::int64_t n, std::int64_t s, std::int64_t i) {
  const IntPair ns(n, s);
  return mod(mod(i, n), ns.gcd());
}

std::int64_t pos(std::int64_t n, std::int64_t s, std::int64_t i) {
  const IntPair ns(n, s);
  const std::int64_t g = ns.gcd();
  const std::int64_t m = ns.without();
  const std::int64_t target = mod(i, n) - cyc(n, s, i);
  // s/g is invertible mod m, and s x = target (mod n) iff (s/g) x = target/g (mod m).
  const std::int64_t sg = (s / g) % m;
  std::int64_t inv = 0;
  for (std::int64_t x = 0; x < m; ++x) {
    if (mod(sg * x, m) == 1 % m) {
      inv = x;
      break;
    }
  }
  return mod((target / g) * inv, m);
}

CylinderPoint J_embed(std::int64_t n, std::int64_t s, std::int64_t i) {
  const IntPair ns(n, s);
  return {mod(rho_index(n, s, i), ns.gcd()), ell(n, s, i)};
}

std::int64_t J_inv(std::int64_t n, std::int64_t s, CylinderPoint cp) {
  const IntPair ns(n, s);
  require_point(ns, cp);
  return (cp.c + 1 - (cp.p == 0 ? 1 : 0)) * ns.without() - cp.p;
}

CylinderPoint F_embed(std::int64_t n, std::int64_t s, std::int64_t i) {
  require_vertex(n, i);
  return {cyc(n, s, i), pos(n, s, i)};
}

std::int64_t F_inv(std::int64_t n, std::int64_t s, CylinderPoint cp) {
  const IntPair ns(n, s);
  require_point(ns, cp);
  return mod(cp.c + cp.p * s, n);
}

CylinderPoint shift(std::int64_t n, std::int64_t s, CylinderPoint cp) {
  const IntPair ns(n, s);
  require_point(ns, cp);
  return {cp.c, mod(cp.p - 1, ns.without())};
}

CylinderPoint shift_back(std::int64_t n, std::int64_t s, CylinderPoint cp) {
  const IntPair ns(n, s);
  require_point(ns, cp);
  return {cp.c, mod(cp.p + 1, ns.without())};
}

CylinderPoint reflect(std::int64_t n, std::int64_t s, CylinderPoint cp) {
  const IntPair ns(n, s);
  require_point(ns, cp);
  return {cp.c, mod(-cp.p, ns.without())};
}

UntangleResult sigma(std::int64_t n, std::int64_t s) {
  const IntPair ns(n, s);
  std::vector<std::int64_t> images(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(i)] = F_inv(n, s, reflect(n, s, J_embed(n, s, i)));
  }
  return {Permutation(std::move(images)), nu(n, s), ns.gcd(), ns.without()};
}

DenseMatrix conjugate_by(const DenseMatrix& m, const Permutation& alpha) {
  if (!m.is_square() || m.rows() != alpha.size()) throw std::invalid_argument("size mismatch");
  DenseMatrix out(m.rows(), m.cols());
  for (std::int64_t i = 0; i < m.rows(); ++i)
    for (std::int64_t j = 0; j < m.cols(); ++j) out(i, j) = m(alpha(i), alpha(j));
  return out;
}

DenseMatrix BlockDiagonalization::block_diagonal() const {
  return DenseMatrix::kron_identity(block_count, circ_to_dense(block));
}

DenseMatrix BlockDiagonalization::reconstruct() const {
  const std::int64_t n = sigma.size();
  // P_sigma X P_sigma^T has (sigma(i), sigma(j)) entry X(i, j).
  const DenseMatrix x = block_diagonal();
  DenseMatrix inner(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) inner(sigma(i), sigma(j)) = x(i, j);
  // Row i of P_n^{s1} M is row i + s1 of M.
  DenseMatrix out(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) out(i, j) = inner(mod(i + s1, n), j);
  return out;
}

BlockDiagonalization block_diagonalize(const TwoParamCirculant& t) {
  UntangleResult u = sigma(t.n(), t.stride());
  std::vector<Rational> block(static_cast<std::size_t>(u.block_size));
  block[0] = t.a();
  block[1] += t.b();
  return {std::move(u.sigma), u.block_count, Circulant(std::move(block)), t.s1()};
}

DenseMatrix untangled_dense(const TwoParamCirculant& t) {
  const std::int64_t n = t.n();
  const DenseMatrix a = to_dense(t);
  DenseMatrix shifted(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) shifted(i, j) = a(mod(i + n - t.s1(), n), j);
  return conjugate_by(shifted, sigma(n, t.stride()).sigma);
}

DenseMatrix stride_polynomial_dense(std::int64_t n, std::int64_t s, const std::vector<Rational>& coeffs) {
  const IntPair ns(n, s);
  if (static_cast<std::int64_t>(coeffs.size()) != ns.without()) {
    throw std::invalid_argument("expected " + std::to_string(ns.without()) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  std::vector<Rational> row(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    row[static_cast<std::size_t>(mod(static_cast<std::int64_t>(k) * s, n))] += coeffs[k];
  }
  return circ_to_dense(Circulant(std::move(row)));
}

BlockDiagonalization untangle_poly(std::int64_t n, std::int64_t s, const std::vector<Rational>& coeffs) {
  const IntPair ns(n, s);
  if (static_cast<std::int64_t>(coeffs.size()) != ns.without()) {
    throw std::invalid_argument("expected " + std::to_string(ns.without()) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  UntangleResult u = sigma(n, s);
  return {std::move(u.sigma), u.block_count, Circulant(coeffs), 0};
}

}  // namespace circ2
