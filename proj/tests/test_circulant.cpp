#include <doctest.h>

#include <string>

#include "circ2/circulant.hpp"
#include "circ2/oracle.hpp"
#include "circ2/permutation.hpp"
#include "support.hpp"

using namespace circ2;

namespace {

// Pattern matrix with 'a', 'b', '0' cells instantiated at (a, b).
DenseMatrix from_pattern(const std::vector<std::string>& rows, const Rational& a, const Rational& b) {
  const auto n = static_cast<std::int64_t>(rows.size());
  DenseMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      m(i, j) = c == 'a' ? a : (c == 'b' ? b : Rational(0));
    }
  return m;
}

}  // namespace

TEST_CASE("TwoParamCirculant invariants") {
  TwoParamCirculant t(12, 1, 4, 2, 1);
  CHECK(t.stride() == 3);
  CHECK(t.block_count() == 3);
  CHECK(t.block_size() == 4);
  CHECK_THROWS_AS(TwoParamCirculant(5, 2, 2, 1, 1), std::domain_error);
  CHECK_THROWS_AS(TwoParamCirculant(5, 3, 1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(TwoParamCirculant(5, 0, 5, 1, 1), std::domain_error);
  CHECK_THROWS_AS(TwoParamCirculant(5, 0, 1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(TwoParamCirculant(5, 0, 1, 1, 0), std::domain_error);
}

TEST_CASE("to_dense reproduces a P_9^2 + b P_9^5") {
  const std::vector<std::string> display = {
      "00a00b000",  //
      "000a00b00",  //
      "0000a00b0",  //
      "00000a00b",  //
      "b00000a00",  //
      "0b00000a0",  //
      "00b00000a",  //
      "a00b00000",  //
      "0a00b0000"};
  for (auto [a, b] : {std::pair<Rational, Rational>{2, 3}, {Rational::parse("-1/2"), 7}}) {
    CHECK(to_dense(TwoParamCirculant(9, 2, 5, a, b)) == from_pattern(display, a, b));
  }
}

TEST_CASE("to_dense small cases") {
  CHECK(to_dense(TwoParamCirculant(2, 0, 1, 5, 7)) == DenseMatrix(2, 2, testing::rationals({5, 7, 7, 5})));

  for (std::int64_t n = 2; n <= 9; ++n)
    for (std::int64_t s1 = 0; s1 < n; ++s1)
      for (std::int64_t s2 = s1 + 1; s2 < n; ++s2) {
        const Rational a = Rational::parse("2/3"), b = -5;
        const DenseMatrix m = to_dense(TwoParamCirculant(n, s1, s2, a, b));
        CHECK(m == a * matrix_of(tau(n, s1)) + b * matrix_of(tau(n, s2)));
        for (std::int64_t i = 0; i < n; ++i) {
          Rational sum;
          for (const auto& x : m.row(i)) sum += x;
          CHECK(sum == a + b);
        }
      }
}

TEST_CASE("circ_to_dense") {
  CHECK(circ_to_dense(Circulant({1})) == DenseMatrix::identity(1));
  const Rational a = 3, b = Rational::parse("-2/5");
  // (a I + b P_4) Circ(a^3, -b a^2, b^2 a, -b^3) = (a^4 - b^4) I
  const Circulant inv({a.pow(3), -b * a.pow(2), b.pow(2) * a, -b.pow(3)});
  const DenseMatrix prod = to_dense(TwoParamCirculant(4, 0, 1, a, b)) * circ_to_dense(inv);
  CHECK(prod == DenseMatrix::identity(4) * (a.pow(4) - b.pow(4)));

  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(testing::uniform(1, 9)));
    for (auto& x : c) x = testing::small_rational();
    const Circulant circ(c);
    const DenseMatrix m = circ_to_dense(circ);
    CHECK(first_row(m) == circ);
    CHECK(is_circulant(m));
    DenseMatrix expected(circ.order(), circ.order());
    for (std::int64_t i = 0; i < circ.order(); ++i) expected += circ[i] * testing::shift_power(circ.order(), i);
    CHECK(m == expected);
  }
  CHECK_THROWS_AS(Circulant({}), std::invalid_argument);
}

TEST_CASE("product of circulants is circulant") {
  for (int k = 0; k < 50; ++k) {
    const std::int64_t n = testing::uniform(1, 8);
    std::vector<Rational> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
    for (auto& x : c1) x = testing::small_rational();
    for (auto& x : c2) x = testing::small_rational();
    const DenseMatrix p = circ_to_dense(Circulant(c1)) * circ_to_dense(Circulant(c2));
    CHECK(is_circulant(p));
    CHECK(p == circ_to_dense(Circulant(c2)) * circ_to_dense(Circulant(c1)));
  }
  CHECK_FALSE(is_circulant(DenseMatrix(2, 2, testing::rationals({1, 2, 3, 4}))));
}

TEST_CASE("associated polynomial") {
  CHECK(associated_polynomial(Circulant({3, 1, -1, -3})).to_string() == "3 + x - x^2 - 3x^3");
  CHECK(associated_polynomial(Circulant::zero(5)).is_zero());
  CHECK(associated_polynomial(Circulant::zero(5)).degree() == -1);
  CHECK(associated_polynomial(Circulant({1, 1, 1, 1})) == PolynomialQ(testing::rationals({1, 1, 1, 1})));
  CHECK(associated_polynomial(Circulant({0, 2, 0, 0})).degree() == 1);
}

TEST_CASE("polynomial gcd") {
  const PolynomialQ phi4(testing::rationals({1, 1, 1, 1}));
  CHECK(poly_gcd(PolynomialQ::x_pow_minus_one(4), phi4) == phi4);
  // 1 + x^4 has no 12th roots of unity among its roots.
  CHECK(poly_gcd(PolynomialQ::x_pow_minus_one(12), PolynomialQ(testing::rationals({1, 0, 0, 0, 1}))).degree() == 0);
  // x + x^4 = x (1 + x^3): shares x^3 + 1 with x^12 - 1.
  CHECK(poly_gcd(PolynomialQ::x_pow_minus_one(12), PolynomialQ(testing::rationals({0, 1, 0, 0, 1}))) ==
        PolynomialQ(testing::rationals({1, 0, 0, 1})));
  CHECK(poly_gcd(PolynomialQ(), PolynomialQ()).is_zero());
  // gcd(2x - 1, 4x^2 - 1) = x - 1/2, monic
  CHECK(poly_gcd(PolynomialQ(testing::rationals({-1, 2})), PolynomialQ(testing::rationals({-1, 0, 4}))) ==
        PolynomialQ({Rational::parse("-1/2"), 1}));
  CHECK(PolynomialQ(testing::rationals({1, 2, 3})).evaluate(2) == Rational(17));
  CHECK_THROWS_AS(poly_rem(PolynomialQ(testing::rationals({1})), PolynomialQ()), std::domain_error);
}

TEST_CASE("rank_circulant") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(n));
    c[0] = 1;
    c[1] = -1;
    CHECK(rank_circulant(Circulant(c)) == n - 1);
    CHECK(rank_oracle(circ_to_dense(Circulant(c))) == n - 1);
    c[1] = 0;
    CHECK(rank_circulant(Circulant(c)) == n);
  }
  CHECK(rank_circulant(Circulant({1, 1, 1, 1})) == 1);
  CHECK(rank_oracle(circ_to_dense(Circulant({1, 1, 1, 1}))) == 1);
  CHECK(rank_circulant(Circulant::zero(6)) == 0);
}

TEST_CASE("rank_circulant agrees with row reduction on random circulants") {
  // Entries from {-1, 0, 1, 2} and an occasional repeated block make rank deficiency common.
  int deficient = 0;
  for (int k = 0; k < 200; ++k) {
    const std::int64_t n = testing::uniform(1, 8);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    if (k % 3 == 0 && n % 2 == 0) {
      for (std::int64_t i = 0; i < n / 2; ++i) {
        c[static_cast<std::size_t>(i)] = testing::uniform(-1, 2);
        c[static_cast<std::size_t>(i + n / 2)] = c[static_cast<std::size_t>(i)] * (k % 2 ? 1 : -1);
      }
    } else {
      for (auto& x : c) x = Rational(testing::uniform(-1, 2)) / Rational(testing::uniform(1, 3));
    }
    const Circulant circ(c);
    const std::int64_t r = rank_circulant(circ);
    CAPTURE(n);
    CHECK(r == rank_oracle(circ_to_dense(circ)));
    if (r < n) ++deficient;
  }
  CHECK(deficient > 20);
}
