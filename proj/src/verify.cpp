#include "mops/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "mops/connection.hpp"
#include "mops/error.hpp"
#include "mops/intersections.hpp"
#include "mops/zeros.hpp"

namespace mops {

namespace {

using PK = PerturbationKind;

class Suite {
 public:
  explicit Suite(std::string name) { res_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& witness) {
    ++res_.checks;
    if (ok) return;
    if (res_.failures++ == 0) res_.witness = witness();
  }
  void fail(const std::string& witness) {
    check(false, [&] { return witness; });
  }
  SuiteResult result() const { return res_; }

 private:
  SuiteResult res_;
};

struct Grid {
  int r_max;
  int n_max;
};

Grid grid(const VerifyConfig& cfg, int r_def, int n_def) {
  return {cfg.r_max.value_or(r_def), cfg.n_max.value_or(n_def)};
}

std::string cell(PK kind, int r, int n) {
  return std::string(to_string(kind)) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
}

std::string cell(PK kind, int r, int n, const Rational& v) {
  return cell(kind, r, n) + " param=" + v.pretty();
}

int first_order(PK kind) { return kind == PK::translation ? 0 : 1; }

const std::vector<Rational>& neg_regime(PK kind) {
  static const std::vector<Rational> t{Rational(-5, 2), Rational(-2), Rational(-1), Rational(-1, 2), Rational(-1, 3)};
  static const std::vector<Rational> d{Rational(-2), Rational(-1), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  return kind == PK::translation ? t : d;
}

const std::vector<Rational>& pos_regime(PK kind) {
  static const std::vector<Rational> t{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(5, 2)};
  static const std::vector<Rational> d{Rational(3, 2), Rational(2), Rational(3), Rational(5), Rational(7)};
  return kind == PK::translation ? t : d;
}

std::vector<Rational> both_regimes(PK kind) {
  auto v = neg_regime(kind);
  const auto& p = pos_regime(kind);
  v.insert(v.end(), p.begin(), p.end());
  return v;
}

const std::vector<Polynomial>& second_kind(int n) {
  thread_local std::vector<Polynomial> cache;
  if (static_cast<int>(cache.size()) <= n) cache = generate(chebyshev_spec(ChebyshevKind::second), n + 8);
  return cache;
}

CCTable closed_table(PK kind, int r, int n_max) {
  return kind == PK::translation ? cc_closed_translation(r, n_max) : cc_closed_dilatation(r, n_max);
}

CCTable canonical_table(PK kind, int r, int n_max, CanonicalPath path) {
  return kind == PK::translation ? cc_canonical_translation(r, n_max, path)
                                 : cc_canonical_dilatation(r, n_max, path);
}

// Index of the first differing entry of two tables of equal size, as "(n,m)".
std::string first_difference(const CCTable& a, const CCTable& b) {
  const int n_max = std::min(a.n_max(), b.n_max());
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      if (a.at(n, m) != b.at(n, m)) {
        return "(" + std::to_string(n) + "," + std::to_string(m) + "): " + a.at(n, m).symbolic("p") + " vs " +
               b.at(n, m).symbolic("p");
      }
    }
  }
  return "size mismatch";
}

void compare_tables(Suite& s, const CCTable& a, const CCTable& b, const std::string& what) {
  s.check(a.same_entries(b), [&] { return what + " differs at " + first_difference(a, b); });
}

// -------------------------------------------------------------- crossmethod

SuiteResult suite_crossmethod(const VerifyConfig& cfg) {
  Suite s("crossmethod");
  const Grid g = grid(cfg, 6, 30);
  const RecurrenceSpec base = chebyshev_spec(ChebyshevKind::second);
  for (PK kind : {PK::translation, PK::dilatation}) {
    for (int r = first_order(kind); r <= g.r_max; ++r) {
      const PerturbationSpec pert{kind, r, std::nullopt};
      const CCTable rec = cc_recurrence(perturbed_spec(pert), base, g.n_max);
      compare_tables(s, rec, closed_table(kind, r, g.n_max), cell(kind, r, g.n_max) + " recurrence vs closed");
    }
  }
  return s.result();
}

// ------------------------------------------------------------------ tables

// Transcribed rows of the order-3 tables, entries m = 0..n.
const std::vector<std::string> kTranslationOrder3 = {
    "1",
    "0 1",
    "0 0 1",
    "0 0 0 1",
    "0 0 0 -mu 1",
    "0 0 -mu/4 0 -mu 1",
    "0 -mu/16 0 -mu/4 0 -mu 1",
    "-mu/64 0 -mu/16 0 -mu/4 0 -mu 1",
    "0 -mu/64 0 -mu/16 0 -mu/4 0 -mu 1",
    "0 0 -mu/64 0 -mu/16 0 -mu/4 0 -mu 1",
    "0 0 0 -mu/64 0 -mu/16 0 -mu/4 0 -mu 1",
    "0 0 0 0 -mu/64 0 -mu/16 0 -mu/4 0 -mu 1",
};

const std::vector<std::string> kDilatationOrder3 = {
    "1",
    "0 1",
    "0 0 1",
    "0 0 0 1",
    "0 0 (1-lambda)/4 0 1",
    "0 (1-lambda)/16 0 (1-lambda)/4 0 1",
    "(1-lambda)/64 0 (1-lambda)/16 0 (1-lambda)/4 0 1",
    "0 (1-lambda)/64 0 (1-lambda)/16 0 (1-lambda)/4 0 1",
    "0 0 (1-lambda)/64 0 (1-lambda)/16 0 (1-lambda)/4 0 1",
    "0 0 0 (1-lambda)/64 0 (1-lambda)/16 0 (1-lambda)/4 0 1",
    "0 0 0 0 (1-lambda)/64 0 (1-lambda)/16 0 (1-lambda)/4 0 1",
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

void check_rendered(Suite& s, const CCTable& t, PK kind, const std::vector<std::string>& expected,
                    const std::string& what) {
  const std::string text = render_text(t, param_name(kind));
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  for (size_t n = 0; n < expected.size(); ++n) {
    if (!std::getline(is, line)) {
      s.fail(what + ": missing row " + std::to_string(n));
      return;
    }
    auto got = tokens(line);
    const bool has_index = !got.empty() && got.front() == std::to_string(n);
    if (has_index) got.erase(got.begin());
    s.check(has_index && got == tokens(expected[n]),
            [&] { return what + " row " + std::to_string(n) + ": got '" + line + "'"; });
  }
}

SuiteResult suite_tables(const VerifyConfig&) {
  Suite s("tables");
  const RecurrenceSpec base = chebyshev_spec(ChebyshevKind::second);
  struct Case {
    PK kind;
    const std::vector<std::string>* rows;
  };
  for (const Case& c : {Case{PK::translation, &kTranslationOrder3}, Case{PK::dilatation, &kDilatationOrder3}}) {
    const int n_max = static_cast<int>(c.rows->size()) - 1;
    const CCTable closed = closed_table(c.kind, 3, n_max);
    const CCTable rec = cc_recurrence(perturbed_spec({c.kind, 3, std::nullopt}), base, n_max);
    check_rendered(s, closed, c.kind, *c.rows, std::string(to_string(c.kind)) + " closed");
    check_rendered(s, rec, c.kind, *c.rows, std::string(to_string(c.kind)) + " recurrence");
  }
  // Order 0: a single sub-diagonal of -mu.
  const CCTable t0 = cc_closed_translation(0, 8);
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; m < n; ++m) {
      const std::string want = m == n - 1 ? "-mu" : "0";
      s.check(t0.at(n, m).symbolic("mu") == want, [&] {
        return "order 0 entry (" + std::to_string(n) + "," + std::to_string(m) + ") = " + t0.at(n, m).symbolic("mu");
      });
    }
  }
  return s.result();
}

// ---------------------------------------------------------- reconstruction

std::vector<Rational> reconstruction_params(PK kind) {
  if (kind == PK::translation) return {Rational(-2), Rational(-1, 2), Rational(1, 3), Rational(1), Rational(5, 2)};
  return {Rational(1, 4), Rational(1, 2), Rational(2), Rational(3), Rational(7), Rational(-1)};
}

SuiteResult suite_reconstruction(const VerifyConfig& cfg) {
  Suite s("reconstruction");
  const Grid g = grid(cfg, 6, 30);
  const auto& P = second_kind(g.n_max);
  const std::vector<Polynomial> X = generate(monomial_spec(), g.n_max);
  for (PK kind : {PK::translation, PK::dilatation}) {
    for (int r = first_order(kind); r <= g.r_max; ++r) {
      const CCTable closed = closed_table(kind, r, g.n_max);
      const CCTable canon = canonical_table(kind, r, g.n_max, CanonicalPath::c_form);
      for (const Rational& v : reconstruction_params(kind)) {
        const PerturbationSpec pert{kind, r, v};
        const auto direct = generate(perturbed_spec(pert), g.n_max);
        const auto via_p = reconstruct(closed.instantiate(v), P);
        const auto via_x = reconstruct(canon.instantiate(v), X);
        for (int n = 0; n <= g.n_max; ++n) {
          const auto i = static_cast<size_t>(n);
          s.check(via_p[i] == direct[i], [&] { return cell(kind, r, n, v) + ": second-kind reconstruction"; });
          s.check(via_x[i] == direct[i], [&] { return cell(kind, r, n, v) + ": canonical reconstruction"; });
          if (n >= r + 1) {
            s.check(product_form(pert, n) == direct[i], [&] { return cell(kind, r, n, v) + ": product form"; });
          }
        }
      }
    }
  }
  return s.result();
}

// ------------------------------------------------------------------- kinds

SuiteResult suite_kinds(const VerifyConfig& cfg) {
  Suite s("kinds");
  const int n_kinds = cfg.n_max.value_or(20);
  const int n_cr = cfg.n_max.value_or(30);
  const int n_all = std::max(n_kinds, n_cr) + 6;
  const auto& P = second_kind(n_all);
  const auto T = generate(chebyshev_spec(ChebyshevKind::first), n_all);
  const auto V = generate(chebyshev_spec(ChebyshevKind::third), n_all);
  const auto W = generate(chebyshev_spec(ChebyshevKind::fourth), n_all);

  const auto pV = generate(perturbed_spec({PK::translation, 0, Rational(1, 2)}), n_kinds);
  const auto pW = generate(perturbed_spec({PK::translation, 0, Rational(-1, 2)}), n_kinds);
  const auto pT = generate(perturbed_spec({PK::dilatation, 1, Rational(2)}), n_kinds);
  for (int n = 0; n <= n_kinds; ++n) {
    const auto i = static_cast<size_t>(n);
    s.check(pV[i] == V[i], [&] { return "third kind as co-recursive, n=" + std::to_string(n); });
    s.check(pW[i] == W[i], [&] { return "fourth kind as co-recursive, n=" + std::to_string(n); });
    s.check(pT[i] == T[i], [&] { return "first kind as co-dilated, n=" + std::to_string(n); });
  }

  const AffineScalar quarter(Rational(1, 4)), half(Rational(1, 2));
  for (int n = 0; n + 2 <= n_cr; ++n) {
    const auto i = static_cast<size_t>(n);
    s.check(T[i + 2] == P[i + 2] - quarter * P[i], [&] { return "T_{n+2} relation, n=" + std::to_string(n); });
    s.check(V[i + 1] == P[i + 1] - half * P[i], [&] { return "V_{n+1} relation, n=" + std::to_string(n); });
    s.check(W[i + 1] == P[i + 1] + half * P[i], [&] { return "W_{n+1} relation, n=" + std::to_string(n); });
  }

  // Connection relations of the first orders with the formal parameter.
  const AffineScalar p = AffineScalar::parameter();
  const AffineScalar c = (AffineScalar(1) - p) / Rational(4);
  const auto t0 = generate(perturbed_spec({PK::translation, 0, std::nullopt}), n_cr);
  const auto t1 = generate(perturbed_spec({PK::translation, 1, std::nullopt}), n_cr);
  const auto t2 = generate(perturbed_spec({PK::translation, 2, std::nullopt}), n_cr);
  const auto d1 = generate(perturbed_spec({PK::dilatation, 1, std::nullopt}), n_cr);
  const auto d2 = generate(perturbed_spec({PK::dilatation, 2, std::nullopt}), n_cr);
  const auto at = [](const std::vector<Polynomial>& v, int k) { return v[static_cast<size_t>(k)]; };
  const auto rel = [&](bool ok, const std::string& name, int n) {
    s.check(ok, [&] { return name + " fails at n=" + std::to_string(n); });
  };
  for (int k = 0; k <= 2; ++k) {
    rel(at(t1, k) == at(P, k) || k == 2, "order-1 translation initial terms", k);
    rel(at(t2, k) == at(P, k), "order-2 translation initial terms", k);
    rel(at(d2, k) == at(P, k), "order-2 dilatation initial terms", k);
  }
  rel(at(d1, 0) == at(P, 0) && at(d1, 1) == at(P, 1), "order-1 dilatation initial terms", 0);
  rel(at(t0, 0) == at(P, 0), "co-recursive initial term", 0);
  rel(at(t1, 2) == at(P, 2) - p * at(P, 1), "order-1 translation, degree 2", 2);
  rel(at(t2, 3) == at(P, 3) - p * at(P, 2), "order-2 translation, degree 3", 3);
  rel(at(t2, 4) == at(P, 4) - p * at(P, 3) - (p / Rational(4)) * at(P, 1), "order-2 translation, degree 4", 4);
  rel(at(d2, 3) == at(P, 3) + c * at(P, 1), "order-2 dilatation, degree 3", 3);
  for (int n = 0; n + 1 <= n_cr; ++n) {
    rel(at(t0, n + 1) == at(P, n + 1) - p * at(P, n), "co-recursive relation", n);
    if (n + 2 <= n_cr) rel(at(d1, n + 2) == at(P, n + 2) + c * at(P, n), "order-1 dilatation relation", n);
    if (n + 3 <= n_cr) {
      rel(at(t1, n + 3) == at(P, n + 3) - p * at(P, n + 2) - (p / Rational(4)) * at(P, n),
          "order-1 translation relation", n);
    }
    if (n + 4 <= n_cr) {
      rel(at(d2, n + 4) == at(P, n + 4) + c * at(P, n + 2) + (c / Rational(4)) * at(P, n),
          "order-2 dilatation relation", n);
    }
    if (n + 5 <= n_cr) {
      rel(at(t2, n + 5) == at(P, n + 5) - p * at(P, n + 4) - (p / Rational(4)) * at(P, n + 2) -
                               (p / Rational(16)) * at(P, n),
          "order-2 translation relation", n);
    }
  }
  return s.result();
}

// --------------------------------------------------------------- canonical

SuiteResult suite_canonical(const VerifyConfig& cfg) {
  Suite s("canonical");
  const Grid g = grid(cfg, 6, 30);
  const RecurrenceSpec X = monomial_spec();
  for (PK kind : {PK::translation, PK::dilatation}) {
    for (int r = first_order(kind); r <= g.r_max; ++r) {
      const PerturbationSpec pert{kind, r, std::nullopt};
      const CCTable cform = canonical_table(kind, r, g.n_max, CanonicalPath::c_form);
      const CCTable binom = canonical_table(kind, r, g.n_max, CanonicalPath::binomial);
      const std::string where = cell(kind, r, g.n_max);
      compare_tables(s, cform, binom, where + " C-form vs binomial");
      compare_tables(s, cform, cc_recurrence(perturbed_spec(pert), X, g.n_max), where + " C-form vs recurrence");
      const auto direct = generate(perturbed_spec(pert), g.n_max);
      for (int n = 0; n <= g.n_max; ++n) {
        for (int m = 0; m <= n; ++m) {
          s.check(direct[static_cast<size_t>(n)].coeff(m) == binom.at(n, m), [&] {
            return cell(kind, r, n) + " m=" + std::to_string(m) + ": binomial vs direct coefficient";
          });
        }
      }
    }
  }

  // Spot values of the first orders.
  const AffineScalar mu = AffineScalar::parameter();
  const CCTable t2 = cc_canonical_translation(2, 40);
  const CCTable d2 = cc_canonical_dilatation(2, 40);
  const auto spot = [&](const CCTable& t, int n, int m, const AffineScalar& want) {
    s.check(t.at(n, m) == want, [&] {
      return "spot (" + std::to_string(n) + "," + std::to_string(m) + ") = " + t.at(n, m).symbolic("p") +
             ", expected " + want.symbolic("p");
    });
  };
  spot(t2, 4, 2, Rational(-3, 4));
  spot(t2, 3, 0, mu / Rational(4));
  spot(t2, 3, 1, Rational(-1, 2));
  spot(t2, 4, 0, Rational(1, 16));
  spot(t2, 4, 1, mu / Rational(4));
  spot(d2, 3, 1, AffineScalar(Rational(-1, 2)) + (AffineScalar(1) - mu) / Rational(4));
  for (int n = 0; 2 * n + 6 <= 40; ++n) {
    spot(t2, 2 * n + 5, 2 * n + 2, mu * AffineScalar(Rational(n + 1, 2)));
    spot(t2, 2 * n + 6, 2 * n + 3, mu * AffineScalar(Rational(2 * n + 3, 4)));
    spot(d2, 2 * n + 4, 2 * n + 2, -(AffineScalar(Rational(2 * n + 2)) + mu) / Rational(4));
  }
  return s.result();
}

// ------------------------------------------------------------------ origin

Rational signed_pow2(int n) {  // (-1)^(n/2) / 2^n for even n
  const Rational v = Rational::pow2(-n);
  return (n / 2) % 2 == 0 ? v : -v;
}

SuiteResult suite_origin(const VerifyConfig& cfg) {
  Suite s("origin");
  const Grid g = grid(cfg, 6, 25);
  for (int n = 0; n <= g.n_max; ++n) {
    if (n >= 1) {
      s.check(canonical_cheb_coeff(n, n - 1).is_zero(), [&] { return "C_{n,n-1} != 0 at n=" + std::to_string(n); });
    }
    if (n % 2 == 0) {
      s.check(canonical_cheb_coeff(n, 0) == signed_pow2(n), [&] { return "C_{n,0} at n=" + std::to_string(n); });
    }
  }
  for (PK kind : {PK::translation, PK::dilatation}) {
    for (int r = first_order(kind); r <= g.r_max; ++r) {
      for (const Rational& v : both_regimes(kind)) {
        const auto direct = generate(perturbed_spec({kind, r, v}), g.n_max);
        for (int n = 0; n <= g.n_max; ++n) {
          const OriginReport rep = origin_report({kind, r, v}, n);
          const auto w = [&](const std::string& what) { return [=] { return cell(kind, r, n, v) + ": " + what; }; };
          s.check(rep.value_at_0 == direct[static_cast<size_t>(n)].coeff(0).as_rational(), w("value at 0"));
          Rational sum(0), lambda0;
          bool zero = false;
          if (kind == PK::translation) {
            if (n >= r + 1) sum = v;
            if (n % 2 == 0) {
              lambda0 = signed_pow2(n);
            } else if (r % 2 == 1 || n < r) {
              zero = true;
            } else {
              const int h = (n - 1) / 2;
              lambda0 = v * Rational::pow2(-2 * h) * Rational(h % 2 == 0 ? -1 : 1);
            }
          } else {
            if (n % 2 == 1) {
              zero = true;
            } else {
              lambda0 = signed_pow2(n);
              if (r % 2 == 1 && n >= r + 1) lambda0 *= v;
            }
          }
          s.check(rep.sum_of_zeros == sum, w("sum of zeros " + rep.sum_of_zeros.pretty()));
          s.check(rep.origin_is_zero == zero, w("origin zero flag"));
          s.check(zero || rep.value_at_0 == lambda0, w("constant coefficient " + rep.value_at_0.pretty()));
          const Rational prod = n % 2 == 0 ? rep.value_at_0 : -rep.value_at_0;
          s.check(rep.product_of_zeros == prod, w("product of zeros"));
          s.check(origin_zero_by_parity(kind, r, n) == zero, w("parity rule"));
        }
      }
    }
  }
  return s.result();
}

// -------------------------------------------------------------- gershgorin

QInterval iv(QuadExt lo, QuadExt hi) { return {std::move(lo), std::move(hi)}; }
QInterval iv(const Rational& lo, const Rational& hi) { return {QuadExt(lo), QuadExt(hi)}; }

std::vector<QInterval> unperturbed_region(int n) {
  if (n == 1) return {iv(Rational(0), Rational(0))};
  if (n == 2) return {iv(Rational(-1, 2), Rational(1, 2))};
  return {iv(Rational(-1), Rational(1))};
}

// Case analysis for the translation union: the inner interval [-a, a] and the moved disc
// [mu - b, mu + b], with the regime boundaries as stated.
std::vector<QInterval> translation_cases(const Rational& mu, const Rational& a, const Rational& b) {
  const Rational reach = a + b;
  if (-reach <= mu && mu <= reach) {
    if (a == b) {  // the moved disc has the same width
      if (mu.sign() < 0) return {iv(mu - b, a)};
      return {iv(-a, mu + b)};
    }
    const Rational gap = a - b;  // b < a: the disc fits inside for |mu| <= a - b
    if (mu < -gap) return {iv(mu - b, a)};
    if (mu <= gap) return {iv(-a, a)};
    return {iv(-a, mu + b)};
  }
  return {iv(-a, a), iv(mu - b, mu + b)};
}

std::vector<QInterval> expected_translation(int r, int n, const Rational& mu) {
  const Rational half(1, 2), one(1);
  if (r == 0) {
    if (n == 1) return {iv(mu, mu)};
    if (n == 2) return translation_cases(mu, half, half);
    return translation_cases(mu, one, half);
  }
  if (n <= r) return unperturbed_region(n);
  if (r == 1) {
    if (n == 2) return translation_cases(mu, half, half);
    if (n == 3) {
      // [-1/2, 1/2] and [mu - 1, mu + 1]: the moved disc is the wide one.
      if (Rational(-3, 2) <= mu && mu <= Rational(-1, 2)) return {iv(mu - one, half)};
      if (Rational(-1, 2) <= mu && mu <= half) return {iv(mu - one, mu + one)};
      if (half <= mu && mu <= Rational(3, 2)) return {iv(-half, mu + one)};
      return {iv(-half, half), iv(mu - one, mu + one)};
    }
    return translation_cases(mu, one, one);
  }
  if (n == r + 1) return translation_cases(mu, one, half);
  return translation_cases(mu, one, one);
}

std::vector<QInterval> expected_dilatation(int r, int n, const Rational& lambda) {
  const QuadExt outer(Rational(1, 2), Rational(1, 2), lambda);  // (1 + sqrt(lambda)) / 2
  const QuadExt inner(Rational(0), Rational(1, 2), lambda);     // sqrt(lambda) / 2
  const bool big = Rational(1) < lambda;
  const auto sym = [](const QuadExt& x) { return std::vector<QInterval>{iv(-x, x)}; };
  if (n == 1) return unperturbed_region(1);
  if (r == 1) {
    if (n == 2) return sym(inner);
    if (n == 3) return sym(outer);
    return big ? sym(outer) : unperturbed_region(3);
  }
  if (r == 2) {
    if (n == 2) return unperturbed_region(2);
    if (n == 3 || n == 4) return sym(outer);
    return big ? sym(outer) : unperturbed_region(3);
  }
  if (n <= r) return unperturbed_region(n);
  return big ? sym(outer) : unperturbed_region(3);
}

bool same_region(const GershgorinRegion& a, const GershgorinRegion& b) {
  if (a.intervals.size() != b.intervals.size()) return false;
  for (size_t i = 0; i < a.intervals.size(); ++i) {
    if (quad_compare(a.intervals[i].lo, b.intervals[i].lo) != 0) return false;
    if (quad_compare(a.intervals[i].hi, b.intervals[i].hi) != 0) return false;
  }
  return true;
}

std::string region_str(const GershgorinRegion& g) {
  std::string out;
  for (const auto& i : g.intervals) out += "[" + i.lo.pretty() + ", " + i.hi.pretty() + "]";
  return out;
}

void check_region(Suite& s, const RecurrenceSpec& spec, int n, const std::vector<QInterval>& expected,
                  const std::string& where) {
  const GershgorinRegion got = gershgorin(spec, n);
  const GershgorinRegion want = merge_intervals(expected);
  s.check(same_region(got, want), [&] { return where + ": got " + region_str(got) + ", expected " + region_str(want); });
  const Polynomial p = generate(spec, n)[static_cast<size_t>(n)];
  const ZeroReport z = all_roots(p);
  bool inside = z.n_complex_pairs == 0;
  for (const auto& root : z.real) inside = inside && got.contains(root.approx, 1e-10);
  s.check(inside, [&] { return where + ": a computed zero lies outside the region"; });
}

SuiteResult suite_gershgorin(const VerifyConfig& cfg) {
  Suite s("gershgorin");
  const Grid g = grid(cfg, 5, 12);
  const std::vector<Rational> mus{Rational(-3),    Rational(-2),   Rational(-3, 2), Rational(-1),
                                  Rational(-3, 4), Rational(-1, 2), Rational(-1, 4), Rational(1, 4),
                                  Rational(1, 2),  Rational(3, 4),  Rational(1),    Rational(3, 2),
                                  Rational(2),     Rational(5, 2),  Rational(3)};
  const std::vector<Rational> lambdas{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(2),
                                      Rational(3),    Rational(4),    Rational(7),    Rational(9)};
  for (int r = 0; r <= g.r_max; ++r) {
    for (const Rational& mu : mus) {
      const RecurrenceSpec spec = perturbed_spec({PK::translation, r, mu});
      for (int n = 1; n <= g.n_max; ++n) {
        check_region(s, spec, n, expected_translation(r, n, mu), cell(PK::translation, r, n, mu));
      }
    }
  }
  for (int r = 1; r <= g.r_max; ++r) {
    for (const Rational& lambda : lambdas) {
      const RecurrenceSpec spec = perturbed_spec({PK::dilatation, r, lambda});
      for (int n = 1; n <= g.n_max; ++n) {
        check_region(s, spec, n, expected_dilatation(r, n, lambda), cell(PK::dilatation, r, n, lambda));
      }
    }
  }
  // The other Chebyshev kinds.
  const QuadExt t_outer(Rational(1, 2), Rational(1, 2), Rational(2));
  const QuadExt t_inner(Rational(0), Rational(1, 2), Rational(2));
  for (int n = 1; n <= g.n_max; ++n) {
    std::vector<QInterval> t, v, w;
    if (n == 1) {
      t = {iv(Rational(0), Rational(0))};
      v = {iv(Rational(1, 2), Rational(1, 2))};
      w = {iv(Rational(-1, 2), Rational(-1, 2))};
    } else if (n == 2) {
      t = {iv(-t_inner, t_inner)};
      v = {iv(Rational(-1, 2), Rational(1))};
      w = {iv(Rational(-1), Rational(1, 2))};
    } else {
      t = {iv(-t_outer, t_outer)};
      v = w = {iv(Rational(-1), Rational(1))};
    }
    const std::string sn = " n=" + std::to_string(n);
    check_region(s, chebyshev_spec(ChebyshevKind::first), n, t, "first kind" + sn);
    check_region(s, chebyshev_spec(ChebyshevKind::third), n, v, "third kind" + sn);
    check_region(s, chebyshev_spec(ChebyshevKind::fourth), n, w, "fourth kind" + sn);
  }
  return s.result();
}

// ---------------------------------------------------------------- extremal

SuiteResult suite_extremal(const VerifyConfig& cfg) {
  Suite s("extremal");
  const Grid g = grid(cfg, 5, 25);
  for (PK kind : {PK::translation, PK::dilatation}) {
    for (int r = first_order(kind); r <= g.r_max; ++r) {
      for (const Rational& v : both_regimes(kind)) {
        // Sign at the greatest zero; at the smallest it is (-1)^k sgn(mu) resp. (-1)^k sgn(1 - lambda).
        const int sg = kind == PK::translation ? -v.sign() : (Rational(1) - v).sign();
        const int base = kind == PK::translation ? v.sign() : sg;
        for (int k = r + 1; k <= g.n_max; ++k) {
          const ExtremalReport rep = extremal_report({kind, r, v}, k);
          const auto w = [&](const std::string& what) { return [=] { return cell(kind, r, k, v) + ": " + what; }; };
          s.check(rep.sign_at_greatest == sg, w("sign at the greatest zero"));
          s.check(rep.sign_at_smallest == (k % 2 == 0 ? base : -base), w("sign at the smallest zero"));
          if (kind == PK::translation) {
            if (v.sign() > 0) {
              s.check(rep.n_above % 2 == 1 && rep.n_below == 0, w("outside counts"));
            } else {
              s.check(rep.n_above == 0 && rep.n_below % 2 == 1, w("outside counts"));
            }
          } else if (v < Rational(1)) {
            s.check(rep.n_above == 0 && rep.n_below == 0, w("outside counts"));
          } else {
            s.check(rep.n_above % 2 == 1 && rep.n_above == rep.n_below, w("outside counts"));
          }
        }
      }
    }
  }
  return s.result();
}

// ------------------------------------------------------------ intersections

void check_soundness(Suite& s, PK kind, int r, int n, const IntersectionReport& rep) {
  const Rational p0 = kind == PK::translation ? Rational(-1) : Rational(3);
  const Rational p1 = kind == PK::translation ? Rational(2) : Rational(-1);
  const Polynomial diff = generate(perturbed_spec({kind, r, p0}), n)[static_cast<size_t>(n)] -
                          generate(perturbed_spec({kind, r, p1}), n)[static_cast<size_t>(n)];
  const std::string where = cell(kind, r, n);
  for (const auto& pt : rep.points) {
    const Enclosure e = evaluate_point(diff, pt.x, 60);
    s.check(e.contains(Rational(0)), [&] { return where + ": difference nonzero at " + pt.x.str(); });
    const Enclosure d = evaluate_point(diff.derivative(), pt.x, 60);
    s.check(pt.is_double ? d.contains(Rational(0)) : d.sign() != 0,
            [&] { return where + ": tangency mismatch at " + pt.x.str(); });
  }
  const RootCounter rc(diff);
  const auto roots = rc.isolate(64);
  s.check(roots.size() == rep.points.size() && rc.total_real() == diff.degree(), [&] {
    return where + ": " + std::to_string(roots.size()) + " distinct roots, " + std::to_string(rep.points.size()) +
           " reported points";
  });
  if (roots.size() != rep.points.size()) return;
  for (size_t i = 0; i < roots.size(); ++i) {
    const auto& pt = rep.points[i];
    const Enclosure c = cos_enclosure(pt.x, 80);
    const bool overlap = c.lo <= roots[i].iv.hi && roots[i].iv.lo <= c.hi;
    s.check(overlap && (roots[i].multiplicity == 2) == pt.is_double,
            [&] { return where + ": root " + std::to_string(i) + " does not match " + pt.x.str(); });
  }
}

SuiteResult suite_intersections(const VerifyConfig& cfg) {
  Suite s("intersections");
  const Grid g = grid(cfg, 8, 40);

  {
    const auto rep = intersection_points(PK::translation, 5, 17);
    s.check(rep.n_distinct == 11, [&] { return "translation r=5 n=17: " + std::to_string(rep.n_distinct) + " points"; });
    int dc = 0;
    for (const auto& pt : rep.points) {
      const bool p5_zero = 6 % pt.x.m() == 0;
      if (p5_zero) ++dc;
      s.check(pt.double_common == p5_zero, [&] { return "translation r=5 n=17: flag at " + pt.x.str(); });
    }
    s.check(dc == 5, [&] { return "translation r=5 n=17: " + std::to_string(dc) + " zeros of P_5"; });
  }
  {
    const auto rep = intersection_points(PK::dilatation, 6, 18);
    int dbl = 0, common = 0;
    for (const auto& pt : rep.points) {
      dbl += pt.is_double ? 1 : 0;
      common += pt.common ? 1 : 0;
    }
    s.check(rep.n_distinct == 11 && dbl == 5 && common == 0, [&] {
      return "dilatation r=6 n=18: " + std::to_string(rep.n_distinct) + " points, " + std::to_string(dbl) +
             " double, " + std::to_string(common) + " common";
    });
  }

  for (PK kind : {PK::translation, PK::dilatation}) {
    for (int r = first_order(kind); r <= g.r_max; ++r) {
      for (int n = r + 1; n <= g.n_max; ++n) {
        const auto rep = intersection_points(kind, r, n);
        const std::string where = cell(kind, r, n);
        s.check(rep.origin == origin_interception_by_parity(kind, r, n),
                [&] { return where + ": origin is " + std::string(to_string(rep.origin)); });
        s.check(rep.origin_common == origin_common_by_parity(kind, r, n),
                [&] { return where + ": origin common class " + std::string(to_string(rep.origin_common)); });
        if (r >= 1) {
          const bool pred = kind == PK::translation ? rep.predicates.double_common : rep.predicates.double_interception;
          s.check((rep.n_distinct == n - r - 1) == pred, [&] { return where + ": count law"; });
        }
        if (kind == PK::translation && r >= 1) {
          s.check(rep.predicates.divides == rep.predicates.all_factor_zeros_common,
                  [&] { return where + ": divisibility predicate"; });
        }
        if (r <= 6 && n <= 30) check_soundness(s, kind, r, n, rep);
      }
    }
  }

  for (int r = 1; r <= 20; ++r) {
    for (int n = r + 1; n <= 400; ++n) {
      const auto p = coincidence_predicates(PK::dilatation, r, n);
      s.check(!(p.all_factor_zeros_double && p.all_factor_zeros_common),
              [&] { return cell(PK::dilatation, r, n) + ": all factor zeros both double and common"; });
      if (r >= 2) s.check(p.never_both, [&] { return cell(PK::dilatation, r, n) + ": both predicates hold"; });
    }
  }
  return s.result();
}

// ----------------------------------------------------------- linearization

SuiteResult suite_linearization(const VerifyConfig& cfg) {
  Suite s("linearization");
  const Grid g = grid(cfg, 6, 20);
  for (int r = 0; r <= g.r_max; ++r) {
    for (int n = 0; n <= g.n_max; ++n) {
      const auto [lhs, rhs] = linearization_check(r, n);
      s.check(lhs == rhs, [&, r = r, n = n] { return "r=" + std::to_string(r) + " n=" + std::to_string(n); });
    }
  }
  return s.result();
}

// ----------------------------------------------------------------- figures

SuiteResult suite_figures(const VerifyConfig&) {
  Suite s("figures");
  const auto count_outside = [](const Polynomial& p, int& below, int& inside, int& above) {
    const RootCounter rc(p);
    // The endpoints are never zeros here; a zero there would surface as a count mismatch.
    if (p.evaluate(Rational(1)).is_zero() || p.evaluate(Rational(-1)).is_zero()) return -1;
    above = rc.count_above(Rational(1));
    below = rc.count_at_most(Rational(-1));
    inside = rc.total_real() - above - below;
    return rc.total_real();
  };
  for (int v = -5; v <= 5; ++v) {
    if (v == 0) continue;
    const PerturbationSpec pert{PK::translation, 5, Rational(v)};
    const Polynomial p = generate(perturbed_spec(pert), 17)[17];
    int below = 0, inside = 0, above = 0;
    const int total = count_outside(p, below, inside, above);
    const RootCounter rc(p);
    const bool simple = rc.isolate(32).size() == 17;
    s.check(total == 17 && simple && (v > 0 ? above == 1 && below == 0 : below == 1 && above == 0),
            [&] { return cell(PK::translation, 5, 17, Rational(v)) + ": zero locations"; });
  }
  for (int v : {-5, -4, -3, -2, -1, 3, 4, 5, 6, 7}) {
    const PerturbationSpec pert{PK::dilatation, 6, Rational(v)};
    const Polynomial p = generate(perturbed_spec(pert), 18)[18];
    int below = 0, inside = 0, above = 0;
    const int total = count_outside(p, below, inside, above);
    if (v > 0) {
      s.check(total == 18 && below == 1 && above == 1 && inside == 16,
              [&] { return cell(PK::dilatation, 6, 18, Rational(v)) + ": zero locations"; });
    } else {
      const ZeroReport z = all_roots(p, 1e-9);
      bool residuals = true;
      for (const auto& c : z.complex_pairs) residuals = residuals && relative_residual(p, c) <= 1e-9;
      s.check(total == 6 && inside == 6 && z.n_real == 6 && z.n_complex_pairs == 6 && residuals,
              [&] { return cell(PK::dilatation, 6, 18, Rational(v)) + ": zero counts"; });
    }
  }
  const auto zeros5 = closed_form_zeros(ChebyshevKind::second, 5);
  const Polynomial p5 = second_kind(5)[5];
  for (const auto& z : zeros5) {
    s.check(evaluate_point(p5, z).contains(Rational(0)),
            [&] { return "P_5 does not vanish at " + z.str(); });
  }
  return s.result();
}

using SuiteFn = SuiteResult (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"crossmethod", suite_crossmethod},   {"tables", suite_tables},         {"reconstruction", suite_reconstruction},
      {"kinds", suite_kinds},               {"canonical", suite_canonical},   {"origin", suite_origin},
      {"gershgorin", suite_gershgorin},     {"extremal", suite_extremal},     {"intersections", suite_intersections},
      {"linearization", suite_linearization}, {"figures", suite_figures},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyResult run_verify(const VerifyConfig& cfg) {
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + cfg.suite + "'");
  }
  if ((cfg.r_max && *cfg.r_max < 0) || (cfg.n_max && *cfg.n_max < 0)) {
    throw Error(ErrorKind::InvalidArgument, "grid bounds must be nonnegative");
  }
  VerifyResult out;
  std::ostringstream os;
  for (const auto& [name, fn] : registry()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    SuiteResult res;
    try {
      res = fn(cfg);
    } catch (const Error& e) {
      res.name = name;
      ++res.failures;
      res.witness = std::string("error: ") + e.what();
    }
    os << res.name << ": " << res.checks << " checks, " << res.failures << " failed\n";
    if (res.failures > 0) {
      os << "  witness: " << res.witness << '\n';
      out.all_pass = false;
    }
    out.suites.push_back(std::move(res));
  }
  os << (out.all_pass ? "ALL PASS" : "FAILED") << '\n';
  out.text = os.str();
  return out;
}

}  // namespace mops
