#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circ2/circulant.hpp"
#include "circ2/dense_matrix.hpp"
#include "circ2/rational.hpp"

namespace circ2 {

/// The four facts of the Bjerhammar-type condition for a candidate group inverse D of A.
struct BjerhammarCheck {
  bool null_spaces_equal;  // Null(A) = Null(D)
  bool commute;            // AD = DA
  bool d2a_is_d;           // D^2 A = D
  bool a2d_is_a;           // A^2 D = A

  bool all() const { return null_spaces_equal && commute && d2a_is_d && a2d_is_a; }
};

BjerhammarCheck bjerhammar_check(const DenseMatrix& a, const DenseMatrix& d);

/// Closed formulas against the dense oracles for one matrix.
struct GridCase {
  std::int64_t n, s1, s2;
  Rational a, b;
  bool singular = false;
  bool det_ok = false;      // det_closed = det_oracle = det_by_digraph
  bool perm_ok = false;     // perm_closed = perm_oracle
  bool inverse_ok = false;  // nonsingular: closed inverse * A = I and equals inverse_oracle;
                            // singular: closed Drazin passes the axioms and equals group_inverse_oracle
  bool bjerhammar_ok = true;  // singular only

  bool passed() const { return det_ok && perm_ok && inverse_ok && bjerhammar_ok; }
};

GridCase verify_case(const TwoParamCirculant& t);

/// Every n in [n_min, n_max], every 0 <= s1 < s2 < n, every (a, b) pair.
std::vector<GridCase> verify_grid(std::int64_t n_max, const std::vector<std::pair<Rational, Rational>>& pairs,
                                  std::int64_t n_min = 2);

/// The default (a, b) pairs: (2,3), (1,-1), (1,1), (-3/2,5/7).
std::vector<std::pair<Rational, Rational>> default_grid_pairs();

}  // namespace circ2
