#include <doctest.h>

#include "mellin/cyclotomic.hpp"
#include "mellin/linalg.hpp"
#include "mellin/multi_index.hpp"
#include "mellin/truncated_series.hpp"
#include "mellin/upoly.hpp"

#include <cmath>
#include <memory>

using namespace mellin;

TEST_CASE("multi-index arithmetic, parsing and graded order") {
  const MultiIndex a{2, 1};
  CHECK(a.degree() == 3);
  CHECK((a + MultiIndex{1, 1}) == MultiIndex{3, 2});
  CHECK(MultiIndex{5, 7}.mod(3) == MultiIndex{2, 1});
  CHECK(a.dot(std::vector<int>{2, 1}) == 5);
  CHECK(a.to_string() == "(2,1)");
  CHECK(parse_multi_index("2,1") == a);
  CHECK(parse_multi_index("(2,1)") == a);
  CHECK_THROWS(parse_multi_index("2,x"));
  CHECK(GradedLess{}(MultiIndex{2, 0}, MultiIndex{0, 3}));
  CHECK(GradedLess{}(MultiIndex{0, 1}, MultiIndex{1, 0}));
}

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(6) / 3) == "2");
  CHECK(rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(factorial(6) == 720);
  CHECK(sign_pow(3) == -1);
  CHECK(sign_pow(-2) == 1);
}

TEST_CASE("univariate polynomials") {
  const UPoly p({Rational(-27), 0, 0, Rational(4)});
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "4*x^3 - 27");
  const UPoly q({Rational(1), Rational(1)});
  const auto [quotient, remainder] = (p * q + UPoly::constant(5)).divmod(q);
  CHECK(quotient == p);
  CHECK(remainder == UPoly::constant(5));
  Rational factor;
  CHECK(p.scaled(Rational(-1, 2)).proportional_to(p, &factor));
  CHECK(factor == -2);
  CHECK_FALSE(p.proportional_to(q));
}

TEST_CASE("cyclotomic polynomials match their defining factorization") {
  CHECK(cyclotomic_polynomial(1) == UPoly({Rational(-1), Rational(1)}));
  CHECK(cyclotomic_polynomial(4) == UPoly({Rational(1), 0, Rational(1)}));
  CHECK(cyclotomic_polynomial(6) == UPoly({Rational(1), Rational(-1), Rational(1)}));
  // x^12 - 1 is the product of Phi_d over the divisors of 12
  UPoly product = UPoly::constant(1);
  for (int d : {1, 2, 3, 4, 6, 12}) product = product * cyclotomic_polynomial(d);
  std::vector<Rational> x12(13, 0);
  x12[0] = -1;
  x12[12] = 1;
  CHECK(product == UPoly(x12));
}

TEST_CASE("group ring of Z/m") {
  const Cyclotomic eps = Cyclotomic::root_power(3, 1);
  CHECK((eps * eps * eps) == Cyclotomic(3, 1));
  CHECK(eps.rotated(2) == Cyclotomic(3, 1));
  const Cyclotomic sum = Cyclotomic(3, 1) + eps + eps * eps;
  CHECK_FALSE(sum.is_zero());
  CHECK(sum.is_zero_embedded());
  CHECK(std::abs(sum.to_complex()) < 1e-15);
  CHECK(std::abs(eps.to_complex() - std::polar(1.0, 2 * M_PI / 3)) < 1e-15);
  CHECK(Cyclotomic(4, {1, 2, 0, Rational(-1, 2)}).to_string() == "[1, 2, 0, -1/2]");
}

TEST_CASE("number field arithmetic inverts nonzero elements") {
  auto modulus = std::make_shared<const UPoly>(cyclotomic_polynomial(5));
  const auto a = CyclotomicField::from_group_ring(modulus, Cyclotomic(5, {1, 2, 0, 3, 0}));
  const auto product = a * a.inverse();
  CHECK(product.value() == UPoly::constant(1));
}

TEST_CASE("exact and numeric ranks agree on a rank-deficient matrix") {
  std::vector<std::vector<Rational>> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(exact_rank(rows) == 2);
  std::vector<std::vector<Complex>> numeric = {{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}, {0.0, 1.0, 1.0}};
  CHECK(numeric_rank(numeric, 1e-10) == 2);
  CHECK(exact_rank(std::vector<std::vector<Rational>>{}) == 0);
}

TEST_CASE("truncated series arithmetic") {
  const int n = 1;
  const auto x = RationalSeries::variable(n, 0, 3);
  const auto one = RationalSeries::constant(n, 3, 1);
  SUBCASE("Mercator series") {
    const auto log = (one + x).log();
    CHECK(log.coefficient(MultiIndex{1}) == 1);
    CHECK(log.coefficient(MultiIndex{2}) == Rational(-1, 2));
    CHECK(log.coefficient(MultiIndex{3}) == Rational(1, 3));
    CHECK(log.coefficient(MultiIndex{0}) == 0);
  }
  SUBCASE("derivative lowers the order") {
    const auto square = x * x;
    const auto d = square.derivative(0);
    CHECK(d.order() == 2);
    CHECK(d.coefficient(MultiIndex{1}) == 2);
    CHECK(d.terms().size() == 1);
  }
  SUBCASE("product truncates") {
    const auto a = (one - x.scaled_by_rational(Rational(1, 2))).truncated(2);
    const auto b = (one + x.scaled_by_rational(Rational(1, 2))).truncated(2);
    const auto product = a * b;
    CHECK(product.order() == 2);
    CHECK(product.coefficient(MultiIndex{0}) == 1);
    CHECK(product.coefficient(MultiIndex{1}) == 0);
    CHECK(product.coefficient(MultiIndex{2}) == Rational(-1, 4));
  }
  SUBCASE("reciprocal of 1 - x is the geometric series") {
    const auto r = (one - x).reciprocal();
    for (int k = 0; k <= 3; ++k) CHECK(r.coefficient(MultiIndex{k}) == 1);
  }
  SUBCASE("complex log carries the constant term") {
    const auto z = ComplexSeries::constant(1, 2, Complex(0.0, 2.0)) + ComplexSeries::variable(1, 0, 2);
    const auto log = z.log();
    CHECK(std::abs(log.coefficient(MultiIndex{0}) - std::log(Complex(0.0, 2.0))) < 1e-15);
    CHECK(std::abs(log.coefficient(MultiIndex{1}) - Complex(0.0, -0.5)) < 1e-15);
  }
  SUBCASE("evaluation") {
    const auto p = one + x + x * x;
    CHECK(p.evaluate({Rational(1, 2)}) == Rational(7, 4));
  }
  SUBCASE("complex pruning only affects the pruned view") {
    auto s = ComplexSeries::constant(1, 2, 1.0);
    s.set(MultiIndex{1}, 1e-14);
    CHECK(s.terms().size() == 2);
    CHECK(s.pruned().terms().size() == 1);
  }
}
