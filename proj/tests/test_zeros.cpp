#include <doctest.h>

#include <algorithm>
#include <random>

#include "mops/json_io.hpp"
#include "mops/zeros.hpp"

using namespace mops;

namespace {

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::monomial(0);
  for (const auto& r : roots) p = p * Polynomial::from_rationals({-r, Rational(1)});
  return p;
}

}  // namespace

TEST_CASE("root counting on products of known linear factors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4), len(1, 9);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rational> roots;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) roots.emplace_back(num(rng), den(rng));
    const Polynomial p = from_roots(roots);
    const RootCounter rc(p);
    CHECK(rc.total_real() == k);
    for (const Rational a : {Rational(-3), Rational(-1, 3), Rational(0), Rational(5, 4)}) {
      const auto above = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return a < r; });
      CHECK(rc.count_above(a) == above);
      CHECK(rc.count_at_most(a) == k - above);
    }
    std::sort(roots.begin(), roots.end());
    const auto got = real_roots(p, 40);
    REQUIRE(got.size() == roots.size());
    for (size_t i = 0; i < roots.size(); ++i) CHECK(got[i].iv.contains(roots[i]));
  }
}

TEST_CASE("isolation reports each second-kind zero once") {
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), 20);
  for (int n = 1; n <= 20; ++n) {
    const auto zs = closed_form_zeros(ChebyshevKind::second, n);
    const auto got = real_roots(P[static_cast<size_t>(n)], 50);
    REQUIRE(got.size() == zs.size());
    for (size_t i = 0; i < zs.size(); ++i) CHECK(std::fabs(got[i].approx - zs[i].approx()) < 1e-14);
  }
}

TEST_CASE("complex roots") {
  // (x^2 + 1)(x - 2)(x^2 - 2x + 5)
  const Polynomial p = Polynomial::from_rationals({Rational(1), Rational(0), Rational(1)}) *
                       Polynomial::from_rationals({Rational(-2), Rational(1)}) *
                       Polynomial::from_rationals({Rational(5), Rational(-2), Rational(1)});
  const ZeroReport z = all_roots(p);
  CHECK(z.n_real == 1);
  CHECK(z.n_complex_pairs == 2);
  REQUIRE(z.complex_pairs.size() == 2);
  CHECK(std::abs(z.complex_pairs[0] - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(z.complex_pairs[1] - std::complex<double>(1, 2)) < 1e-12);
  for (const auto& c : z.complex_pairs) CHECK(relative_residual(p, c) < 1e-13);
  const json j = z;
  CHECK(j.get<ZeroReport>() == z);
}

TEST_CASE("jacobi matrix and gershgorin") {
  const auto j = jacobi(chebyshev_spec(ChebyshevKind::second), 4);
  CHECK(j.diag == std::vector<Rational>(4, Rational(0)));
  CHECK(j.offdiag == std::vector<QuadExt>(3, QuadExt(Rational(1, 2))));
  const auto g = gershgorin(perturbed_spec({PerturbationKind::translation, 2, Rational(5)}), 6);
  REQUIRE(g.intervals.size() == 2);
  CHECK(g.intervals[1].lo == QuadExt(Rational(4)));
  CHECK(g.intervals[1].hi == QuadExt(Rational(6)));
  const auto d = gershgorin(perturbed_spec({PerturbationKind::dilatation, 3, Rational(3)}), 7);
  REQUIRE(d.intervals.size() == 1);
  CHECK(d.intervals[0].hi == QuadExt(Rational(1, 2), Rational(1, 2), Rational(3)));
  CHECK(d.contains(1.36, 0.0));
  CHECK_FALSE(d.contains(1.37, 0.0));
  try {
    gershgorin(perturbed_spec({PerturbationKind::dilatation, 2, Rational(-1)}), 5);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveGamma);
  }
  const json jg = d;
  CHECK(jg.get<GershgorinRegion>() == d);
}

TEST_CASE("origin report agrees with the generated polynomial") {
  for (const auto kind : {PerturbationKind::translation, PerturbationKind::dilatation}) {
    for (int r = kind == PerturbationKind::translation ? 0 : 1; r <= 5; ++r) {
      for (const Rational v : {Rational(-2), Rational(1, 3), Rational(3)}) {
        const auto P = generate(perturbed_spec({kind, r, v}), 14);
        for (int n = 1; n <= 14; ++n) {
          const OriginReport o = origin_report({kind, r, v}, n);
          const auto& p = P[static_cast<size_t>(n)];
          CHECK(o.value_at_0 == p.evaluate(Rational(0)));
          CHECK(o.sum_of_zeros == -p.coeff(n - 1).as_rational());
          CHECK(o.origin_is_zero == origin_zero_by_parity(kind, r, n));
        }
      }
    }
  }
  CHECK(origin_report({PerturbationKind::translation, 2, Rational(1)}, 4).sum_of_zeros == Rational(1));
  CHECK_THROWS_AS(origin_report({PerturbationKind::translation, 2, std::nullopt}, 4), Error);
}

TEST_CASE("extremal report") {
  const ExtremalReport t = extremal_report({PerturbationKind::translation, 5, Rational(3)}, 17);
  CHECK(t.sign_at_greatest == -1);
  CHECK(t.sign_at_smallest == -1);
  CHECK(t.n_above == 1);
  CHECK(t.n_below == 0);
  const ExtremalReport d = extremal_report({PerturbationKind::dilatation, 6, Rational(3)}, 18);
  CHECK(d.n_above == 1);
  CHECK(d.n_below == 1);
  CHECK_THROWS_AS(extremal_report({PerturbationKind::translation, 5, Rational(0)}, 17), Error);
  CHECK_THROWS_AS(extremal_report({PerturbationKind::translation, 5, Rational(1)}, 5), Error);
}
