#pragma once

#include <utility>
#include <vector>

#include "mops/cos_point.hpp"
#include "mops/polynomial.hpp"
#include "mops/recurrence.hpp"

namespace mops {

/// P_n - mu P_r P_{n-r-1} (translation) or P_n + (1-lambda)/4 P_{r-1} P_{n-r-1} (dilatation).
Polynomial product_form(const PerturbationSpec& pert, int n);

/// Degrees (a, b) of the two factors whose zeros are the interception points.
std::pair<int, int> factor_degrees(PerturbationKind kind, int r, int n);

enum class InterceptionClass { not_interception, simple_interception, double_interception };
enum class CommonZeroClass { not_common_zero, simple_common_zero, double_common_zero };

std::string_view to_string(InterceptionClass c);
std::string_view to_string(CommonZeroClass c);
InterceptionClass parse_interception_class(std::string_view s);
CommonZeroClass parse_common_zero_class(std::string_view s);

struct CoincidencePredicates {
  // translation, r >= 1
  bool double_common = false;  // n = i(r+1) + r, i >= 1
  bool divides = false;        // n = j(r+1) - 1, j >= 2
  // dilatation
  bool double_interception = false;  // n = r(i+1), i >= 1
  bool common = false;               // n = jr - 1, j >= 2
  bool never_both = true;            // !(double_interception && common), arithmetic form
  // lattice forms over the first factor's zeros (false when it has none)
  bool all_factor_zeros_double = false;
  bool all_factor_zeros_common = false;

  friend bool operator==(const CoincidencePredicates& a, const CoincidencePredicates& b) = default;
};

CoincidencePredicates coincidence_predicates(PerturbationKind kind, int r, int n);

struct InterceptionPoint {
  CosPoint x;
  bool is_double = false;
  bool common = false;
  bool double_common = false;
  friend bool operator==(const InterceptionPoint& a, const InterceptionPoint& b) = default;
};

struct IntersectionReport {
  PerturbationKind kind = PerturbationKind::translation;
  int r = 0;
  int n = 0;
  std::vector<InterceptionPoint> points;  // increasing x
  int n_distinct = 0;
  InterceptionClass origin = InterceptionClass::not_interception;
  CommonZeroClass origin_common = CommonZeroClass::not_common_zero;
  CoincidencePredicates predicates;
  friend bool operator==(const IntersectionReport& a, const IntersectionReport& b) = default;
};

IntersectionReport intersection_points(PerturbationKind kind, int r, int n);

/// The stated parity tables for the origin.
InterceptionClass origin_interception_by_parity(PerturbationKind kind, int r, int n);
CommonZeroClass origin_common_by_parity(PerturbationKind kind, int r, int n);

/// (P_r P_{n+r}, sum_{i=0}^r 4^-i P_{n+2(r-i)})
std::pair<Polynomial, Polynomial> linearization_check(int r, int n);

}  // namespace mops
