#include "mops/intersections.hpp"

#include <algorithm>
#include <map>

namespace mops {

namespace {

const std::vector<Polynomial>& second_kind_upto(int n) {
  thread_local std::vector<Polynomial> cache;
  if (static_cast<int>(cache.size()) <= n) cache = generate(chebyshev_spec(ChebyshevKind::second), n + 8);
  return cache;
}

void require_range(PerturbationKind kind, int r, int n) {
  PerturbationSpec{kind, r, std::nullopt}.validate();
  if (n < r + 1) throw Error(ErrorKind::InvalidArgument, "needs n >= r+1");
}

bool zero_of_chebyshev(const CosPoint& x, int n) {
  return n >= 1 && x.k() > 0 && x.k() < x.m() && (n + 1) % x.m() == 0;
}

}  // namespace

std::pair<int, int> factor_degrees(PerturbationKind kind, int r, int n) {
  return kind == PerturbationKind::translation ? std::pair{r, n - r - 1} : std::pair{r - 1, n - r - 1};
}

Polynomial product_form(const PerturbationSpec& pert, int n) {
  require_range(pert.kind, pert.order, n);
  const auto& P = second_kind_upto(n);
  const auto [a, b] = factor_degrees(pert.kind, pert.order, n);
  const Polynomial prod = P[static_cast<size_t>(a)] * P[static_cast<size_t>(b)];
  if (pert.kind == PerturbationKind::translation) return P[static_cast<size_t>(n)] - pert.value() * prod;
  const AffineScalar c = (AffineScalar(1) - pert.value()) / Rational(4);
  return P[static_cast<size_t>(n)] + c * prod;
}

std::string_view to_string(InterceptionClass c) {
  switch (c) {
    case InterceptionClass::not_interception: return "not_interception";
    case InterceptionClass::simple_interception: return "simple_interception";
    case InterceptionClass::double_interception: return "double_interception";
  }
  return "";
}

std::string_view to_string(CommonZeroClass c) {
  switch (c) {
    case CommonZeroClass::not_common_zero: return "not_common_zero";
    case CommonZeroClass::simple_common_zero: return "simple_common_zero";
    case CommonZeroClass::double_common_zero: return "double_common_zero";
  }
  return "";
}

InterceptionClass parse_interception_class(std::string_view s) {
  for (auto c : {InterceptionClass::not_interception, InterceptionClass::simple_interception,
                 InterceptionClass::double_interception}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorKind::Parse, "unknown interception class '" + std::string(s) + "'");
}

CommonZeroClass parse_common_zero_class(std::string_view s) {
  for (auto c : {CommonZeroClass::not_common_zero, CommonZeroClass::simple_common_zero,
                 CommonZeroClass::double_common_zero}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorKind::Parse, "unknown common-zero class '" + std::string(s) + "'");
}

CoincidencePredicates coincidence_predicates(PerturbationKind kind, int r, int n) {
  require_range(kind, r, n);
  CoincidencePredicates p;
  if (kind == PerturbationKind::translation) {
    p.double_common = r >= 1 && (n - r) % (r + 1) == 0 && (n - r) / (r + 1) >= 1;
    p.divides = r >= 1 && (n + 1) % (r + 1) == 0 && (n + 1) / (r + 1) >= 2;
  } else {
    p.double_interception = n % r == 0 && n / r >= 2;
    p.common = (n + 1) % r == 0 && (n + 1) / r >= 2;
    p.never_both = !(p.double_interception && p.common);
  }
  const auto [a, b] = factor_degrees(kind, r, n);
  if (a >= 1) {
    p.all_factor_zeros_double = true;
    p.all_factor_zeros_common = true;
    for (long k = 1; k <= a; ++k) {
      const CosPoint x(k, a + 1);
      p.all_factor_zeros_double = p.all_factor_zeros_double && zero_of_chebyshev(x, b);
      p.all_factor_zeros_common = p.all_factor_zeros_common && zero_of_chebyshev(x, n);
    }
  }
  return p;
}

IntersectionReport intersection_points(PerturbationKind kind, int r, int n) {
  require_range(kind, r, n);
  IntersectionReport rep;
  rep.kind = kind;
  rep.r = r;
  rep.n = n;
  const auto [a, b] = factor_degrees(kind, r, n);
  std::map<CosPoint, int> hits;
  for (int deg : {a, b}) {
    for (long k = 1; k <= deg; ++k) ++hits[CosPoint(k, deg + 1)];
  }
  for (const auto& [x, count] : hits) {
    InterceptionPoint pt;
    pt.x = x;
    pt.is_double = count == 2;
    pt.common = zero_of_chebyshev(x, n);
    pt.double_common = pt.is_double && pt.common;
    rep.points.push_back(pt);
    if (x.is_origin()) {
      rep.origin = pt.is_double ? InterceptionClass::double_interception : InterceptionClass::simple_interception;
      if (pt.common) {
        rep.origin_common =
            pt.is_double ? CommonZeroClass::double_common_zero : CommonZeroClass::simple_common_zero;
      }
    }
  }
  rep.n_distinct = static_cast<int>(rep.points.size());
  rep.predicates = coincidence_predicates(kind, r, n);
  return rep;
}

InterceptionClass origin_interception_by_parity(PerturbationKind kind, int r, int n) {
  const bool r_even = r % 2 == 0, n_even = n % 2 == 0;
  if (kind == PerturbationKind::translation) {
    if (n_even) return InterceptionClass::simple_interception;
    return r_even ? InterceptionClass::not_interception : InterceptionClass::double_interception;
  }
  if (r_even) return n_even ? InterceptionClass::double_interception : InterceptionClass::simple_interception;
  return n_even ? InterceptionClass::not_interception : InterceptionClass::simple_interception;
}

CommonZeroClass origin_common_by_parity(PerturbationKind kind, int r, int n) {
  if (kind == PerturbationKind::translation) {
    return (n % 2 == 1 && r % 2 == 1) ? CommonZeroClass::double_common_zero : CommonZeroClass::not_common_zero;
  }
  return n % 2 == 1 ? CommonZeroClass::simple_common_zero : CommonZeroClass::not_common_zero;
}

std::pair<Polynomial, Polynomial> linearization_check(int r, int n) {
  if (r < 0 || n < 0) throw Error(ErrorKind::InvalidArgument, "linearization needs r, n >= 0");
  const auto& P = second_kind_upto(n + 2 * r);
  Polynomial lhs = P[static_cast<size_t>(r)] * P[static_cast<size_t>(n + r)];
  Polynomial rhs;
  for (int i = 0; i <= r; ++i) rhs += AffineScalar(Rational::inv_pow4(i)) * P[static_cast<size_t>(n + 2 * (r - i))];
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace mops
