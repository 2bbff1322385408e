#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circ2/circulant.hpp"
#include "circ2/dense_matrix.hpp"
#include "circ2/rational.hpp"

namespace circ2 {

struct Arc {
  std::int64_t from;
  std::int64_t to;
  Rational weight;
  std::string label;  // symbolic name ("a", "b"); empty when none

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// D(A): an arc i -> j of weight a_ij for every nonzero entry.
struct WeightedDigraph {
  std::int64_t n = 0;
  std::vector<Arc> arcs;
};

/// Spanning subdigraph with every in- and out-degree equal to 1.
struct LinearSubdigraph {
  std::vector<std::int64_t> successor;
  Rational weight;
  std::int64_t cycle_count;
};

/// Linear-subdigraph enumeration is exponential; graphs above this order are rejected.
inline constexpr std::int64_t kMaxEnumerationOrder = 16;

/// Arcs (i, i + s1, a) labelled "a" and (i, i + s2, b) labelled "b", i = 0..n-1.
WeightedDigraph build_digraph(const TwoParamCirculant& t);

/// D(A) for an arbitrary square matrix; arcs are unlabelled.
WeightedDigraph build_digraph(const DenseMatrix& a);

/// Connected classes of the stride (s2 - s1) arcs, each ordered by smallest element.
/// There are (n, s2 - s1) of them, each of size n \ (s2 - s1).
std::vector<std::set<std::int64_t>> components(const TwoParamCirculant& t);

/// Throws std::length_error above kMaxEnumerationOrder.
std::vector<LinearSubdigraph> linear_subdigraphs(const WeightedDigraph& g);

/// sum over linear subdigraphs L of (-1)^{n - c(L)} w(L).
Rational det_by_digraph(const WeightedDigraph& g);

/// sum over linear subdigraphs L of w(L).
Rational perm_by_digraph(const WeightedDigraph& g);

/// Graphviz digraph, one line per arc in arc order. With `symbolic`, arcs
/// carrying a label are annotated with it instead of the numeric weight.
std::string to_dot(const WeightedDigraph& g, bool symbolic = false);

}  // namespace circ2
