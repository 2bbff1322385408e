#include "circ2/verify.hpp"

#include <algorithm>

#include "circ2/closedform.hpp"
#include "circ2/digraph.hpp"
#include "circ2/oracle.hpp"

namespace circ2 {

namespace {

bool contains_all(const DenseMatrix& m, const std::vector<std::vector<Rational>>& vectors) {
  for (const auto& v : vectors) {
    if (!null_contains(m, v)) return false;
  }
  return true;
}

}  // namespace

BjerhammarCheck bjerhammar_check(const DenseMatrix& a, const DenseMatrix& d) {
  const auto null_a = null_space_basis(a);
  const auto null_d = null_space_basis(d);
  BjerhammarCheck c{};
  c.null_spaces_equal = null_a.size() == null_d.size() && contains_all(d, null_a) && contains_all(a, null_d);
  const DenseMatrix ad = a * d;
  c.commute = ad == d * a;
  c.d2a_is_d = d * d * a == d;
  c.a2d_is_a = a * ad == a;
  return c;
}

GridCase verify_case(const TwoParamCirculant& t) {
  GridCase c{t.n(), t.s1(), t.s2(), t.a(), t.b()};
  const DenseMatrix a = to_dense(t);
  const DetResult det = det_closed(t);
  c.singular = det.singular();
  c.det_ok = det.value == det_oracle(a) && det.value == det_by_digraph(build_digraph(t));
  c.perm_ok = perm_closed(t) == perm_oracle(a);

  if (!c.singular) {
    const DenseMatrix inv = inverse_closed(t).dense();
    c.inverse_ok = inv * a == DenseMatrix::identity(t.n()) && inv == inverse_oracle(a);
  } else {
    const DenseMatrix d = drazin_closed(t).dense();
    c.inverse_ok = drazin_axioms_check(a, d, 1) && d == group_inverse_oracle(a);
    c.bjerhammar_ok = bjerhammar_check(a, d).all();
  }
  return c;
}

std::vector<GridCase> verify_grid(std::int64_t n_max, const std::vector<std::pair<Rational, Rational>>& pairs,
                                  std::int64_t n_min) {
  std::vector<GridCase> out;
  for (std::int64_t n = std::max<std::int64_t>(n_min, 2); n <= n_max; ++n)
    for (std::int64_t s1 = 0; s1 < n; ++s1)
      for (std::int64_t s2 = s1 + 1; s2 < n; ++s2)
        for (const auto& [a, b] : pairs) out.push_back(verify_case(TwoParamCirculant(n, s1, s2, a, b)));
  return out;
}

std::vector<std::pair<Rational, Rational>> default_grid_pairs() {
  return {{2, 3}, {1, -1}, {1, 1}, {Rational(-3, 2), Rational(5, 7)}};
}

}  // namespace circ2
