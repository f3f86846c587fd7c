#include <doctest.h>

#include <set>

#include "mops/intersections.hpp"
#include "mops/json_io.hpp"
#include "mops/zeros.hpp"

using namespace mops;

namespace {

// Interception points from first principles: every lattice point cos(k pi/m), m <= n + 1, at which the
// difference of two perturbed polynomials vanishes, with the multiplicity read off the derivative.
std::vector<std::pair<CosPoint, bool>> brute_points(PerturbationKind kind, int r, int n) {
  const Rational a = kind == PerturbationKind::translation ? Rational(1) : Rational(2);
  const Rational b = kind == PerturbationKind::translation ? Rational(-3) : Rational(5);
  const Polynomial diff = generate(perturbed_spec({kind, r, a}), n)[static_cast<size_t>(n)] -
                          generate(perturbed_spec({kind, r, b}), n)[static_cast<size_t>(n)];
  std::set<CosPoint> lattice;
  for (long m = 2; m <= n + 1; ++m) {
    for (long k = 1; k < m; ++k) lattice.insert(CosPoint(k, m));
  }
  std::vector<std::pair<CosPoint, bool>> out;
  for (const auto& x : lattice) {
    if (!evaluate_point(diff, x, 200).contains(Rational(0))) continue;
    out.emplace_back(x, evaluate_point(diff.derivative(), x, 200).contains(Rational(0)));
  }
  return out;
}

}  // namespace

TEST_CASE("interception points agree with a lattice scan") {
  for (const auto kind : {PerturbationKind::translation, PerturbationKind::dilatation}) {
    for (int r = kind == PerturbationKind::translation ? 0 : 1; r <= 4; ++r) {
      for (int n = r + 1; n <= 13; ++n) {
        CAPTURE(r);
        CAPTURE(n);
        const auto rep = intersection_points(kind, r, n);
        const auto want = brute_points(kind, r, n);
        REQUIRE(rep.points.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) {
          CHECK(rep.points[i].x == want[i].first);
          CHECK(rep.points[i].is_double == want[i].second);
        }
      }
    }
  }
}

TEST_CASE("figure anchors") {
  const auto t = intersection_points(PerturbationKind::translation, 5, 17);
  CHECK(t.n_distinct == 11);
  int dc = 0;
  for (const auto& p : t.points) dc += p.double_common ? 1 : 0;
  CHECK(dc == 5);
  const auto d = intersection_points(PerturbationKind::dilatation, 6, 18);
  int dbl = 0, common = 0;
  for (const auto& p : d.points) {
    dbl += p.is_double ? 1 : 0;
    common += p.common ? 1 : 0;
  }
  CHECK(d.n_distinct == 11);
  CHECK(dbl == 5);
  CHECK(common == 0);
  const json j = d;
  CHECK(j.get<IntersectionReport>() == d);
  CHECK(j["points"][0].contains("x_approx"));
}

TEST_CASE("product form") {
  for (const auto kind : {PerturbationKind::translation, PerturbationKind::dilatation}) {
    for (int r = kind == PerturbationKind::translation ? 0 : 1; r <= 6; ++r) {
      const PerturbationSpec pert{kind, r, std::nullopt};
      const auto P = generate(perturbed_spec(pert), 30);
      for (int n = r + 1; n <= 30; ++n) CHECK(product_form(pert, n) == P[static_cast<size_t>(n)]);
    }
  }
  CHECK_THROWS_AS(product_form({PerturbationKind::translation, 3, std::nullopt}, 3), Error);
  CHECK(factor_degrees(PerturbationKind::dilatation, 6, 18) == std::pair{5, 11});
}

TEST_CASE("linearization examples") {
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), 10);
  const auto [l1, r1] = linearization_check(1, 1);
  CHECK(l1 == Polynomial::from_rationals({Rational(0), Rational(-1, 4), Rational(0), Rational(1)}));
  CHECK(r1 == l1);
  for (int n = 0; n <= 10; ++n) {
    const auto [l0, r0] = linearization_check(0, n);
    CHECK(l0 == P[static_cast<size_t>(n)]);
    CHECK(r0 == l0);
  }

  const auto [lhs, rhs] = linearization_check(3, 2);
  CHECK(lhs.degree() == 8);
  CHECK(lhs == P[3] * P[5]);
  CHECK(rhs == P[8] + AffineScalar(Rational(1, 4)) * P[6] + AffineScalar(Rational(1, 16)) * P[4] +
                   AffineScalar(Rational(1, 64)) * P[2]);
  CHECK(lhs == rhs);
}

TEST_CASE("class names round trip") {
  for (auto c : {InterceptionClass::not_interception, InterceptionClass::simple_interception,
                 InterceptionClass::double_interception}) {
    CHECK(parse_interception_class(to_string(c)) == c);
  }
  for (auto c : {CommonZeroClass::not_common_zero, CommonZeroClass::simple_common_zero,
                 CommonZeroClass::double_common_zero}) {
    CHECK(parse_common_zero_class(to_string(c)) == c);
  }
}
