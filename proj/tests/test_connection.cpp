#include <doctest.h>

#include <sstream>

#include "mops/connection.hpp"
#include "mops/json_io.hpp"
#include "oracles.hpp"

using namespace mops;

namespace {

const PerturbationKind kinds[] = {PerturbationKind::translation, PerturbationKind::dilatation};

int first_order(PerturbationKind k) { return k == PerturbationKind::translation ? 0 : 1; }

CCTable closed(PerturbationKind k, int r, int n) {
  return k == PerturbationKind::translation ? cc_closed_translation(r, n) : cc_closed_dilatation(r, n);
}

}  // namespace

TEST_CASE("both methods agree with brute-force expansion") {
  const int n_max = 16;
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), n_max);
  const auto X = generate(monomial_spec(), n_max);
  for (auto kind : kinds) {
    for (int r = first_order(kind); r <= 5; ++r) {
      CAPTURE(r);
      const PerturbationSpec pert{kind, r, std::nullopt};
      const auto tilde = generate(perturbed_spec(pert), n_max);
      const CCTable rec = cc_recurrence(perturbed_spec(pert), chebyshev_spec(ChebyshevKind::second), n_max);
      const CCTable cf = closed(kind, r, n_max);
      const CCTable can = kind == PerturbationKind::translation ? cc_canonical_translation(r, n_max)
                                                                 : cc_canonical_dilatation(r, n_max);
      for (int n = 0; n <= n_max; ++n) {
        const auto want_p = oracle::expand(tilde[static_cast<size_t>(n)], P);
        const auto want_x = oracle::expand(tilde[static_cast<size_t>(n)], X);
        for (int m = 0; m <= n; ++m) {
          CHECK(rec.at(n, m) == want_p[static_cast<size_t>(m)]);
          CHECK(cf.at(n, m) == want_p[static_cast<size_t>(m)]);
          CHECK(can.at(n, m) == want_x[static_cast<size_t>(m)]);
        }
      }
    }
  }
}

TEST_CASE("table structure") {
  const CCTable t = cc_closed_translation(3, 11);
  CHECK(t.basis() == Basis::second_kind);
  CHECK(t.at(4, 3).symbolic("mu") == "-mu");
  CHECK(t.at(7, 0).symbolic("mu") == "-mu/64");
  CHECK(t.at(3, 5).is_zero());
  for (int n = 0; n <= 11; ++n) CHECK(t.at(n, n) == AffineScalar(1));
  // Constant along downward diagonals from row 2r+1.
  for (int n = 7; n < 11; ++n) {
    for (int m = 0; m < n; ++m) CHECK(t.at(n, m) == t.at(n + 1, m + 1));
  }
  const CCTable d = cc_closed_dilatation(3, 10);
  CHECK(d.at(6, 0).symbolic("lambda") == "(1-lambda)/64");
  CHECK(d.row_support(6) == 4);
  CHECK(cc_canonical_translation(2, 6).basis() == Basis::canonical);
  // A perturbation beyond the table leaves the identity.
  const CCTable id = cc_closed_translation(9, 6);
  for (int n = 0; n <= 6; ++n) CHECK(id.row_support(n) == 1);
}

TEST_CASE("canonical paths agree") {
  for (auto kind : kinds) {
    for (int r = first_order(kind); r <= 6; ++r) {
      const auto get = [&](CanonicalPath p) {
        return kind == PerturbationKind::translation ? cc_canonical_translation(r, 24, p)
                                                     : cc_canonical_dilatation(r, 24, p);
      };
      CHECK(get(CanonicalPath::c_form).same_entries(get(CanonicalPath::binomial)));
    }
  }
}

TEST_CASE("reconstruction at concrete parameters") {
  const auto P = generate(chebyshev_spec(ChebyshevKind::second), 20);
  for (auto kind : kinds) {
    for (int r = first_order(kind); r <= 4; ++r) {
      for (const Rational v : {Rational(-3), Rational(1, 3), Rational(5, 2)}) {
        const auto direct = generate(perturbed_spec({kind, r, v}), 20);
        CHECK(reconstruct(closed(kind, r, 20).instantiate(v), P) == direct);
      }
    }
  }
}

TEST_CASE("rendering") {
  const std::string text = render_text(cc_closed_translation(0, 3), "mu");
  std::istringstream is(text);
  std::string header, row0, row1;
  std::getline(is, header);
  std::getline(is, row0);
  std::getline(is, row1);
  CHECK(row0 == "0\t1");
  CHECK(header == "n\\m\t0\t1\t2\t3");
  CHECK(row1 == "1\t-mu\t1");
  const std::string csv = render_csv(cc_closed_dilatation(1, 2), "lambda");
  CHECK(csv.rfind("n,m,value,const,lin\n", 0) == 0);
  CHECK(csv.find("2,0,(1-lambda)/4,1/4,-1/4") != std::string::npos);
}

TEST_CASE("json round trip of a table") {
  const CCTable t = cc_canonical_dilatation(2, 9);
  const json j = t;
  CHECK(j.get<CCTable>() == t);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(cc_closed_dilatation(0, 5), Error);
  CHECK_THROWS_AS(cc_closed_translation(-1, 5), Error);
  CHECK_THROWS_AS(cc_closed_translation(1, kMaxTableOrder + 1), Error);
  CHECK(parse_basis("canonical") == Basis::canonical);
  CHECK_THROWS_AS(parse_method("guess"), Error);
}
