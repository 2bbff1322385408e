#include <doctest.h>

#include <regex>
#include <sstream>

#include "circ2/closedform.hpp"
#include "circ2/digraph.hpp"
#include "circ2/oracle.hpp"
#include "support.hpp"

using namespace circ2;

namespace {

using SetOfSets = std::set<std::set<std::int64_t>>;

SetOfSets as_set(const std::vector<std::set<std::int64_t>>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("build_digraph") {
  const WeightedDigraph g = build_digraph(TwoParamCirculant(5, 1, 3, 2, -1));
  REQUIRE(g.n == 5);
  REQUIRE(g.arcs.size() == 10);
  for (std::int64_t i = 0; i < 5; ++i) {
    CHECK(std::count(g.arcs.begin(), g.arcs.end(), Arc{i, (i + 1) % 5, 2, "a"}) == 1);
    CHECK(std::count(g.arcs.begin(), g.arcs.end(), Arc{i, (i + 3) % 5, -1, "b"}) == 1);
  }
  const WeightedDigraph h = build_digraph(to_dense(TwoParamCirculant(5, 1, 3, 2, -1)));
  CHECK(h.arcs.size() == 10);
  CHECK(det_by_digraph(g) == det_by_digraph(h));
  CHECK_THROWS_AS(build_digraph(DenseMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("components follow the stride cosets") {
  CHECK(as_set(components(TwoParamCirculant(8, 0, 6, 1, 1))) == SetOfSets{{0, 2, 4, 6}, {1, 3, 5, 7}});
  CHECK(as_set(components(TwoParamCirculant(9, 0, 3, 1, 1))) == SetOfSets{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  CHECK(components(TwoParamCirculant(7, 2, 5, 1, 1)).size() == 1);
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t s2 = 1; s2 < n; ++s2)
      CHECK(static_cast<std::int64_t>(components(TwoParamCirculant(n, 0, s2, 1, 1)).size()) == gcd(n, s2));
}

TEST_CASE("linear subdigraphs") {
  CHECK(linear_subdigraphs(build_digraph(TwoParamCirculant(4, 0, 1, 2, 1))).size() == 2);
  CHECK(linear_subdigraphs(build_digraph(TwoParamCirculant(8, 0, 6, 2, 1))).size() == 4);

  for (const LinearSubdigraph& l : linear_subdigraphs(build_digraph(TwoParamCirculant(6, 1, 4, 2, 3)))) {
    std::vector<std::int64_t> seen(l.successor);
    std::sort(seen.begin(), seen.end());
    for (std::int64_t i = 0; i < 6; ++i) CHECK(seen[static_cast<std::size_t>(i)] == i);
    CHECK(l.cycle_count == static_cast<std::int64_t>(Permutation(l.successor).cycles().size()) +
                               std::count_if(l.successor.begin(), l.successor.end(),
                                             [i = std::int64_t{0}](std::int64_t v) mutable { return v == i++; }));
  }
}

TEST_CASE("linear subdigraph count is 2^(n, s2 - s1) for n <= 10") {
  for (std::int64_t n = 2; n <= 10; ++n)
    for (std::int64_t s1 = 0; s1 < n; ++s1)
      for (std::int64_t s2 = s1 + 1; s2 < n; ++s2) {
        const auto subs = linear_subdigraphs(build_digraph(TwoParamCirculant(n, s1, s2, 2, 3)));
        CHECK(static_cast<std::int64_t>(subs.size()) == (std::int64_t{1} << gcd(n, s2 - s1)));
      }
}

TEST_CASE("det and perm via linear subdigraphs") {
  const WeightedDigraph g = build_digraph(TwoParamCirculant(4, 0, 1, 2, 1));
  CHECK(det_by_digraph(g) == 15);
  CHECK(perm_by_digraph(g) == 17);

  const WeightedDigraph loop = build_digraph(DenseMatrix(1, 1, {Rational(5)}));
  CHECK(linear_subdigraphs(loop).size() == 1);
  CHECK(det_by_digraph(loop) == 5);
  CHECK(perm_by_digraph(loop) == 5);

  const WeightedDigraph empty = build_digraph(DenseMatrix(3, 3));
  CHECK(linear_subdigraphs(empty).empty());
  CHECK(det_by_digraph(empty) == 0);

  for (int k = 0; k < 30; ++k) {
    const DenseMatrix a = testing::random_matrix(5, 5, 3);
    CHECK(det_by_digraph(build_digraph(a)) == testing::leibniz_det(a));
    CHECK(perm_by_digraph(build_digraph(a)) == testing::brute_perm(a));
  }

  for (std::int64_t n = 2; n <= 10; ++n)
    for (std::int64_t s1 = 0; s1 < n; ++s1)
      for (std::int64_t s2 = s1 + 1; s2 < n; ++s2) {
        const TwoParamCirculant t(n, s1, s2, Rational::parse("-3/2"), Rational::parse("5/7"));
        CHECK(det_by_digraph(build_digraph(t)) == det_closed(t).value);
        CHECK(perm_by_digraph(build_digraph(t)) == perm_closed(t));
      }
}

TEST_CASE("enumeration refuses n > 16") {
  const WeightedDigraph big = build_digraph(TwoParamCirculant(17, 0, 1, 1, 1));
  CHECK_THROWS_AS(linear_subdigraphs(big), std::length_error);
  CHECK_NOTHROW(linear_subdigraphs(build_digraph(TwoParamCirculant(16, 0, 8, 1, 1))));
}

TEST_CASE("DOT output lists exactly the arcs") {
  const TwoParamCirculant t(6, 1, 3, Rational::parse("2/3"), -1);
  const WeightedDigraph g = build_digraph(t);
  for (bool symbolic : {false, true}) {
    const std::string dot = to_dot(g, symbolic);
    CHECK(dot.rfind("digraph D {\n", 0) == 0);
    CHECK(dot.substr(dot.size() - 2) == "}\n");
    const std::regex arc_re(R"re(\s*(\d+) -> (\d+) \[label="([^"]*)"\];)re");
    std::multiset<std::tuple<std::int64_t, std::int64_t, std::string>> parsed, expected;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
      std::smatch m;
      if (std::regex_match(line, m, arc_re)) parsed.emplace(std::stoll(m[1]), std::stoll(m[2]), m[3]);
    }
    for (const Arc& a : g.arcs) expected.emplace(a.from, a.to, symbolic ? a.label : a.weight.to_string());
    CHECK(parsed == expected);
  }
  CHECK(to_dot(build_digraph(TwoParamCirculant(2, 0, 1, 1, 1)), true) ==
        "digraph D {\n  0 -> 0 [label=\"a\"];\n  0 -> 1 [label=\"b\"];\n  1 -> 1 [label=\"a\"];\n"
        "  1 -> 0 [label=\"b\"];\n}\n");
}
