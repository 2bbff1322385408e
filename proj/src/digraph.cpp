#include "circ2/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "circ2/integer.hpp"

namespace circ2 {

WeightedDigraph build_digraph(const TwoParamCirculant& t) {
  WeightedDigraph g{t.n(), {}};
  g.arcs.reserve(static_cast<std::size_t>(2 * t.n()));
  for (std::int64_t i = 0; i < t.n(); ++i) {
    g.arcs.push_back({i, mod(i + t.s1(), t.n()), t.a(), "a"});
    g.arcs.push_back({i, mod(i + t.s2(), t.n()), t.b(), "b"});
  }
  return g;
}

WeightedDigraph build_digraph(const DenseMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("digraph of a non-square matrix");
  WeightedDigraph g{a.rows(), {}};
  for (std::int64_t i = 0; i < a.rows(); ++i)
    for (std::int64_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) g.arcs.push_back({i, j, a(i, j), ""});
  return g;
}

std::vector<std::set<std::int64_t>> components(const TwoParamCirculant& t) {
  const std::int64_t n = t.n();
  std::vector<std::int64_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int64_t v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t u = find(i), v = find(mod(i + t.stride(), n));
    if (u != v) parent[static_cast<std::size_t>(std::max(u, v))] = std::min(u, v);
  }

  std::vector<std::set<std::int64_t>> out;
  std::vector<std::int64_t> slot(static_cast<std::size_t>(n), -1);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t root = find(i);
    auto& k = slot[static_cast<std::size_t>(root)];
    if (k < 0) {
      k = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(k)].insert(i);
  }
  return out;
}

namespace {

std::int64_t count_cycles(const std::vector<std::int64_t>& successor) {
  std::vector<bool> seen(successor.size(), false);
  std::int64_t cycles = 0;
  for (std::size_t v = 0; v < successor.size(); ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (std::size_t u = v; !seen[u]; u = static_cast<std::size_t>(successor[u])) seen[u] = true;
  }
  return cycles;
}

struct Enumerator {
  const WeightedDigraph& g;
  std::vector<std::vector<const Arc*>> out_arcs;
  std::vector<std::int64_t> successor;
  std::vector<bool> target_used;
  std::vector<LinearSubdigraph> found;

  explicit Enumerator(const WeightedDigraph& graph)
      : g(graph),
        out_arcs(static_cast<std::size_t>(graph.n)),
        successor(static_cast<std::size_t>(graph.n), -1),
        target_used(static_cast<std::size_t>(graph.n), false) {
    for (const Arc& arc : g.arcs) {
      if (arc.from < 0 || arc.from >= g.n || arc.to < 0 || arc.to >= g.n) {
        throw std::invalid_argument("arc endpoint outside [0, n)");
      }
      out_arcs[static_cast<std::size_t>(arc.from)].push_back(&arc);
    }
  }

  void visit(std::int64_t v, const Rational& weight) {
    if (v == g.n) {
      found.push_back({successor, weight, count_cycles(successor)});
      return;
    }
    for (const Arc* arc : out_arcs[static_cast<std::size_t>(v)]) {
      auto to = static_cast<std::size_t>(arc->to);
      if (target_used[to]) continue;
      target_used[to] = true;
      successor[static_cast<std::size_t>(v)] = arc->to;
      visit(v + 1, weight * arc->weight);
      target_used[to] = false;
    }
    successor[static_cast<std::size_t>(v)] = -1;
  }
};

}  // namespace

std::vector<LinearSubdigraph> linear_subdigraphs(const WeightedDigraph& g) {
  if (g.n > kMaxEnumerationOrder) {
    throw std::length_error("linear subdigraph enumeration is limited to n <= " +
                            std::to_string(kMaxEnumerationOrder));
  }
  Enumerator e(g);
  e.visit(0, Rational(1));
  return std::move(e.found);
}

Rational det_by_digraph(const WeightedDigraph& g) {
  Rational det;
  for (const auto& l : linear_subdigraphs(g)) {
    if ((g.n - l.cycle_count) % 2 == 0) {
      det += l.weight;
    } else {
      det -= l.weight;
    }
  }
  return det;
}

Rational perm_by_digraph(const WeightedDigraph& g) {
  Rational perm;
  for (const auto& l : linear_subdigraphs(g)) perm += l.weight;
  return perm;
}

std::string to_dot(const WeightedDigraph& g, bool symbolic) {
  std::ostringstream os;
  os << "digraph D {\n";
  std::vector<bool> touched(static_cast<std::size_t>(g.n), false);
  for (const Arc& arc : g.arcs) {
    touched[static_cast<std::size_t>(arc.from)] = true;
    touched[static_cast<std::size_t>(arc.to)] = true;
  }
  for (std::int64_t v = 0; v < g.n; ++v) {
    if (!touched[static_cast<std::size_t>(v)]) os << "  " << v << ";\n";
  }
  for (const Arc& arc : g.arcs) {
    const std::string label = (symbolic && !arc.label.empty()) ? arc.label : arc.weight.to_string();
    os << "  " << arc.from << " -> " << arc.to << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace circ2
