#include <doctest.h>

#include <cmath>

#include "mops/cos_point.hpp"
#include "mops/recurrence.hpp"

using namespace mops;

namespace {

// Monic second-kind polynomial from the trigonometric form sin((n+1)t)/sin(t) / 2^n.
long double monic_u(int n, long double t) { return std::sin((n + 1) * t) / std::sin(t) / std::pow(2.0L, n); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = Polynomial::from_rationals({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  const auto q = Polynomial::from_rationals({Rational(1), Rational(1)});                // x + 1
  CHECK(p.degree() == 2);
  CHECK((p * q).degree() == 3);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.derivative() == Polynomial::from_rationals({Rational(0), Rational(2)}));
  CHECK(q.reflect() == Polynomial::from_rationals({Rational(1), Rational(-1)}));
  CHECK(q.mul_x() == Polynomial::from_rationals({Rational(0), Rational(1), Rational(1)}));
  CHECK(p.evaluate(Rational(1, 2)) == Rational(-3, 4));
  CHECK(p.is_monic());
  CHECK(Polynomial::monomial(3).coeff(3) == AffineScalar(1));
  const Polynomial formal = Polynomial::monomial(1) - AffineScalar::parameter() * Polynomial::monomial(0);
  CHECK_FALSE(formal.is_concrete());
  CHECK_THROWS_AS(formal.evaluate(Rational(1)), Error);
  CHECK(formal.instantiate(Rational(2)).evaluate(Rational(2)).is_zero());
}

TEST_CASE("second-kind polynomials match the trigonometric form") {
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), 25);
  for (int n = 0; n <= 25; ++n) {
    CHECK(P[static_cast<size_t>(n)].is_monic());
    for (long double t : {0.3L, 1.1L, 2.0L, 2.9L}) {
      const long double want = monic_u(n, t);
      const long double got = P[static_cast<size_t>(n)].evaluate_double(static_cast<double>(std::cos(t)));
      CHECK(std::fabs(static_cast<double>(got - want)) < 1e-12);
    }
  }
}

TEST_CASE("canonical coefficients match the explicit binomial sum") {
  // x^n - C(n-1,1)/4 x^(n-2) + C(n-2,2)/16 x^(n-4) - ...
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), 30);
  for (int n = 0; n <= 30; ++n) {
    for (int m = 0; m <= n; ++m) {
      Rational want(0);
      if ((n - m) % 2 == 0) {
        const int k = (n - m) / 2;
        want = binomial(n - k, k) * Rational::inv_pow4(k) * Rational(k % 2 == 0 ? 1 : -1);
      }
      CHECK(canonical_cheb_coeff(n, m) == want);
      CHECK(P[static_cast<size_t>(n)].coeff(m) == AffineScalar(want));
    }
  }
  CHECK(binomial(10, 3) == Rational(120));
  CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("closed-form zeros are zeros") {
  for (auto kind : {ChebyshevKind::first, ChebyshevKind::second, ChebyshevKind::third, ChebyshevKind::fourth}) {
    const auto P = generate(chebyshev_spec(kind), 15);
    for (int n = 1; n <= 15; ++n) {
      const auto z = closed_form_zeros(kind, n);
      REQUIRE(z.size() == static_cast<size_t>(n));
      for (size_t i = 0; i < z.size(); ++i) {
        if (i > 0) CHECK(z[i - 1] < z[i]);
        CHECK(evaluate_point(P[static_cast<size_t>(n)], z[i]).contains(Rational(0)));
      }
    }
  }
}

TEST_CASE("recurrence specs and perturbations") {
  const RecurrenceSpec u = chebyshev_spec(ChebyshevKind::second);
  CHECK(u.symmetric(50));
  CHECK(u.gamma_at(1) == AffineScalar(Rational(1, 4)));
  CHECK(u.gamma_at(0).is_zero());
  CHECK(chebyshev_spec(ChebyshevKind::first).gamma_at(1) == AffineScalar(Rational(1, 2)));

  const RecurrenceSpec t = perturbed_spec({PerturbationKind::translation, 3, Rational(2)});
  CHECK(t.beta_at(3) == AffineScalar(2));
  CHECK(t.beta_at(2).is_zero());
  CHECK_FALSE(t.symmetric(10));
  const RecurrenceSpec d = perturbed_spec({PerturbationKind::dilatation, 2, Rational(3)});
  CHECK(d.gamma_at(2) == AffineScalar(Rational(3, 4)));
  CHECK(d.symmetric(10));
  // A trivial perturbation is the identity.
  CHECK(perturbed_spec({PerturbationKind::translation, 4, Rational(0)}) == u);
  CHECK(perturbed_spec({PerturbationKind::dilatation, 4, Rational(1)}) == u);

  const auto kind_of = [](const PerturbationSpec& p) {
    try {
      p.validate();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of({PerturbationKind::translation, -1, Rational(1)}) == ErrorKind::InvalidOrder);
  CHECK(kind_of({PerturbationKind::dilatation, 0, Rational(2)}) == ErrorKind::InvalidOrder);
  CHECK(kind_of({PerturbationKind::dilatation, 2, Rational(0)}) == ErrorKind::NonRegular);
  CHECK(parse_perturbation_kind("dilation") == PerturbationKind::dilatation);
  CHECK_THROWS_AS(parse_perturbation_kind("shift"), Error);
  CHECK(norm_squared(u, 3) == AffineScalar(Rational(1, 64)));
}

TEST_CASE("cosine points") {
  CHECK(CosPoint(2, 4) == CosPoint(1, 2));
  CHECK(CosPoint(1, 2).is_origin());
  CHECK(CosPoint(1, 3).exact_value() == Rational(1, 2));
  CHECK_FALSE(CosPoint(1, 5).exact_value().has_value());
  CHECK(CosPoint(5, 6) < CosPoint(1, 6));
  CHECK_THROWS_AS(CosPoint(3, 2), Error);
  CHECK(CosPoint(1, 6).str() == "cos(pi/6)");
  for (long m = 1; m <= 30; ++m) {
    for (long k = 0; k <= m; ++k) {
      const CosPoint x(k, m);
      const Enclosure e = cos_enclosure(x, 80);
      const double c = std::cos(M_PI * static_cast<double>(k) / static_cast<double>(m));
      CHECK(e.width() <= Rational::pow2(-80));
      CHECK(std::fabs(e.lo.to_double() - c) < 1e-15);
      CHECK(std::fabs(x.approx() - c) < 1e-15);
    }
  }
}

TEST_CASE("certified evaluation") {
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), 10);
  // P_10 is positive beyond its greatest zero cos(pi/11).
  CHECK(certified_sign(P[10], CosPoint(1, 12)) == 1);
  CHECK(certified_sign(P[3], CosPoint(1, 2)) == 0);
  const Enclosure e = evaluate_point(P[9], CosPoint(1, 7), 100);
  CHECK(e.width() <= Rational::pow2(-100));
  CHECK_THROWS_AS(certified_sign(P[5], CosPoint(1, 6)), Error);  // an irrational zero cannot be certified
}
