#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mops/cos_point.hpp"
#include "mops/numerics.hpp"
#include "mops/polynomial.hpp"

namespace mops {

/// Coefficient table indexed by subscript: value(i) = 0 for i < first, override or tail otherwise.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  CoefficientSequence(int first, AffineScalar tail) : first_(first), tail_(std::move(tail)) {}

  AffineScalar at(int i) const;
  void set(int i, const AffineScalar& v);
  int first() const { return first_; }
  const AffineScalar& tail() const { return tail_; }
  const std::map<int, AffineScalar>& overrides() const { return overrides_; }

  friend bool operator==(const CoefficientSequence& a, const CoefficientSequence& b) = default;

 private:
  int first_ = 0;
  AffineScalar tail_;
  std::map<int, AffineScalar> overrides_;  // only entries differing from tail_
};

/// beta_n (first index 0) and gamma_n (first index 1, gamma_0 = 0).
struct RecurrenceSpec {
  CoefficientSequence beta{0, AffineScalar()};
  CoefficientSequence gamma{1, AffineScalar()};
  std::string label;
  bool regular = true;  // generation rejects gamma = 0

  AffineScalar beta_at(int n) const { return beta.at(n); }
  AffineScalar gamma_at(int n) const { return gamma.at(n); }
  bool symmetric(int n_max) const;

  /// Same coefficients; the label is descriptive only.
  friend bool operator==(const RecurrenceSpec& a, const RecurrenceSpec& b) {
    return a.beta == b.beta && a.gamma == b.gamma;
  }
};

enum class ChebyshevKind { first, second, third, fourth };
enum class PerturbationKind { translation, dilatation };

std::string_view to_string(ChebyshevKind kind);
std::string_view to_string(PerturbationKind kind);
ChebyshevKind parse_chebyshev_kind(std::string_view s);
PerturbationKind parse_perturbation_kind(std::string_view s);

struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::translation;
  int order = 0;
  std::optional<Rational> param;  // nullopt: the formal parameter

  bool formal() const { return !param.has_value(); }
  /// The parameter as an affine scalar: concrete value or 0 + 1*p.
  AffineScalar value() const;
  /// Throws InvalidOrder / NonRegular for inputs outside the admissible range.
  void validate() const;
  PerturbationSpec with_param(const Rational& v) const { return {kind, order, v}; }

  friend bool operator==(const PerturbationSpec& a, const PerturbationSpec& b) = default;
};

RecurrenceSpec chebyshev_spec(ChebyshevKind kind);
/// The canonical basis x^n: beta = gamma = 0.
RecurrenceSpec monomial_spec();

RecurrenceSpec apply_perturbation(const RecurrenceSpec& base, const PerturbationSpec& pert);
/// Perturbation of the second-kind base.
RecurrenceSpec perturbed_spec(const PerturbationSpec& pert);

/// [P_0, ..., P_{n_max}] by the three-term recurrence.
std::vector<Polynomial> generate(const RecurrenceSpec& spec, int n_max);

/// Coefficient of x^m in the monic second-kind P_n.
Rational canonical_cheb_coeff(int n, int m);
Rational binomial(long n, long k);

/// Zeros of the monic Chebyshev polynomial of degree n, increasing x.
std::vector<CosPoint> closed_form_zeros(ChebyshevKind kind, int n);

/// gamma_1 * ... * gamma_n.
AffineScalar norm_squared(const RecurrenceSpec& spec, int n);

}  // namespace mops
