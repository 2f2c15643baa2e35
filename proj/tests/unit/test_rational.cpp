#include "doctest.h"

#include "nk/errors.hpp"
#include "nk/rational.hpp"

using nk::Rational;
using nk::RationalMatrix;

TEST_CASE("rational text round trip") {
  CHECK(nk::to_string(Rational(-6, 4)) == "-3/2");
  CHECK(nk::to_string(Rational(4, 2)) == "2");
  CHECK(nk::parse_rational("-3/2") == Rational(-3, 2));
  CHECK(nk::parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(nk::parse_rational("1/0"), nk::PreconditionError);
  CHECK_THROWS_AS(nk::parse_rational("abc"), nk::PreconditionError);
}

TEST_CASE("inverse and determinant agree") {
  RationalMatrix m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(nk::determinant(m) == 4);
  CHECK(m * nk::inverse(m) == RationalMatrix::identity(3));
  CHECK(nk::rank(m) == 3);
  RationalMatrix s{{1, 2}, {2, 4}};
  CHECK(nk::determinant(s) == 0);
  CHECK_THROWS_AS(nk::inverse(s), nk::PreconditionError);
}

TEST_CASE("kernel basis annihilates and has the right size") {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}};
  auto k = nk::kernel_basis(m);
  CHECK(k.rows() == 3);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("characteristic polynomial against expanded roots") {
  // diag(1,2,2) conjugated by a unimodular matrix keeps the spectrum.
  RationalMatrix p{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  RationalMatrix d = RationalMatrix::diagonal({1, 2, 2});
  RationalMatrix m = p * d * nk::inverse(p);
  auto cp = nk::characteristic_polynomial(m);
  // (x-1)(x-2)^2 = x^3 - 5x^2 + 8x - 4
  REQUIRE(cp.coeffs.size() == 4);
  CHECK(cp.coeffs[0] == -4);
  CHECK(cp.coeffs[1] == 8);
  CHECK(cp.coeffs[2] == -5);
  CHECK(cp.coeffs[3] == 1);
  auto f = nk::factor_rational_roots(cp);
  REQUIRE(f.roots.size() == 2);
  CHECK(f.roots[0] == std::pair<Rational, int>{1, 1});
  CHECK(f.roots[1] == std::pair<Rational, int>{2, 2});
  CHECK(f.residual.degree() == 0);
}

TEST_CASE("irrational factor is left as residual") {
  RationalMatrix m{{0, 2}, {1, 0}};
  auto f = nk::factor_rational_roots(nk::characteristic_polynomial(m));
  CHECK(f.roots.empty());
  CHECK(f.residual.degree() == 2);
}

TEST_CASE("leading principal minors") {
  RationalMatrix m{{2, 1}, {1, 3}};
  auto minors = nk::leading_principal_minors(m);
  REQUIRE(minors.size() == 2);
  CHECK(minors[0] == 2);
  CHECK(minors[1] == 5);
}
