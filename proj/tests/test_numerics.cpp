#include <doctest.h>

#include <cmath>
#include <random>

#include "mops/numerics.hpp"

using namespace mops;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("+7/14") == Rational(1, 2));
  CHECK(Rational::parse(" -4/2 ") == Rational(-2));
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(5).pretty() == "5");
  CHECK(Rational(-1, 2).pretty() == "-1/2");

  for (const char* bad : {"", "1/", "/2", "a", "1.5", "--1", "1/2/3"}) {
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
  try {
    Rational::parse("1/0");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("rational helpers") {
  CHECK(Rational::pow2(3) == Rational(8));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::inv_pow4(2) == Rational(1, 16));
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("affine scalars") {
  const AffineScalar p = AffineScalar::parameter();
  CHECK((p / Rational(-4)).symbolic("mu") == "-mu/4");
  CHECK((-p).symbolic("mu") == "-mu");
  CHECK((p * AffineScalar(Rational(3, 4))).symbolic("mu") == "3*mu/4");
  CHECK(((AffineScalar(1) - p) / Rational(4)).symbolic("lambda") == "(1-lambda)/4");
  CHECK(((AffineScalar(1) - p) / Rational(64)).symbolic("lambda") == "(1-lambda)/64");
  CHECK(AffineScalar(Rational(-1, 16)).symbolic("mu") == "-1/16");
  CHECK((AffineScalar(2) + p).instantiate(Rational(3)) == Rational(5));
  CHECK_THROWS_AS(p.as_rational(), Error);
  try {
    (void)(p * p);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AffineOverflow);
  }
}

TEST_CASE("quadratic extension normal form") {
  const QuadExt x(Rational(1, 2), Rational(1, 2), Rational(4));
  CHECK(x.is_rational());
  CHECK(x.a() == Rational(3, 2));
  const QuadExt y(Rational(1, 2), Rational(1, 2), Rational(3));
  CHECK(y.pretty() == "1/2+1/2*sqrt(3)");
  CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), Rational(2)) + QuadExt(Rational(0), Rational(1), Rational(3)),
                  Error);
  CHECK(QuadExt::sqrt_in(Rational(3, 4), Rational(3)) == QuadExt(Rational(0), Rational(1, 2), Rational(3)));
  CHECK_FALSE(QuadExt::sqrt_in(Rational(2), Rational(3)).has_value());
}

TEST_CASE("quadratic comparison agrees with floating point away from ties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9), rad(2, 30);
  int compared = 0;
  for (int i = 0; i < 4000; ++i) {
    const QuadExt x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(rad(rng)));
    const Rational q(num(rng), den(rng));
    const double d = x.to_double() - q.to_double();
    if (std::fabs(d) < 1e-9) continue;
    ++compared;
    CHECK((quad_compare(x, q) < 0) == (d < 0));
  }
  CHECK(compared > 3000);
  // Exact ties.
  CHECK(quad_compare(QuadExt(Rational(1), Rational(0), Rational(0)), Rational(1)) == 0);
  const QuadExt s(Rational(0), Rational(1), Rational(2));
  CHECK(quad_compare(s, s) == 0);
  CHECK(quad_less(-s, s));
}
