#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "mops/cos_point.hpp"
#include "mops/numerics.hpp"
#include "mops/polynomial.hpp"
#include "mops/recurrence.hpp"

namespace mops {

/// Order-n Jacobi matrix: diag beta_0..beta_{n-1}, offdiag alpha_1..alpha_{n-1}, alpha_i^2 = gamma_i.
struct SymTridiagonal {
  std::vector<Rational> diag;
  std::vector<QuadExt> offdiag;
};

SymTridiagonal jacobi(const RecurrenceSpec& spec, int n);

struct QInterval {
  QuadExt lo;
  QuadExt hi;
  friend bool operator==(const QInterval& a, const QInterval& b) = default;
};

struct GershgorinRegion {
  std::vector<QInterval> intervals;  // sorted, pairwise disjoint

  bool contains(double x, double slack = 0.0) const;
  friend bool operator==(const GershgorinRegion& a, const GershgorinRegion& b) = default;
};

/// Sorts and merges overlapping or touching closed intervals.
GershgorinRegion merge_intervals(std::vector<QInterval> parts);
GershgorinRegion gershgorin(const RecurrenceSpec& spec, int n);

/// Exact real-root counting for a concrete polynomial: Yun square-free split, one Sturm
/// chain per factor, counts weighted by multiplicity.
class RootCounter {
 public:
  explicit RootCounter(const Polynomial& p);
  ~RootCounter();
  RootCounter(RootCounter&&) noexcept;
  RootCounter& operator=(RootCounter&&) noexcept;

  int degree() const;
  /// Zeros in (a, b], with multiplicity.
  int count(const Rational& a, const Rational& b) const;
  /// Zeros in (a, +inf).
  int count_above(const Rational& a) const;
  /// Zeros in (-inf, b].
  int count_at_most(const Rational& b) const;
  int total_real() const;

  struct Isolated {
    Enclosure iv;
    int multiplicity;
  };
  /// Disjoint isolating intervals of width <= 2^-bits, increasing.
  std::vector<Isolated> isolate(long bits) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct RealRoot {
  Enclosure iv;
  double approx = 0.0;
  friend bool operator==(const RealRoot& a, const RealRoot& b) = default;
};

/// All real roots, repeated by multiplicity, increasing.
std::vector<RealRoot> real_roots(const Polynomial& p, long bits = 60);

struct ZeroReport {
  std::vector<RealRoot> real;
  std::vector<std::complex<double>> complex_pairs;  // upper member of each conjugate pair
  int n_real = 0;
  int n_complex_pairs = 0;
  friend bool operator==(const ZeroReport& a, const ZeroReport& b) = default;
};

/// |p(z)| / sum |a_i| |z|^i
double relative_residual(const Polynomial& p, std::complex<double> z);

ZeroReport all_roots(const Polynomial& p, double tol = 1e-13, long bits = 60);

struct OriginReport {
  Rational value_at_0;
  Rational sum_of_zeros;
  Rational product_of_zeros;
  bool origin_is_zero = false;
  friend bool operator==(const OriginReport& a, const OriginReport& b) = default;
};

OriginReport origin_report(const PerturbationSpec& pert, int n);
/// The parity case analysis for P_n(0) = 0 (concrete nonzero perturbation).
bool origin_zero_by_parity(PerturbationKind kind, int r, int n);

struct ExtremalReport {
  int sign_at_greatest = 0;
  int sign_at_smallest = 0;
  int n_above = 0;
  int n_below = 0;
  friend bool operator==(const ExtremalReport& a, const ExtremalReport& b) = default;
};

/// Signs at the extremal zeros of P_k and counts of perturbed zeros outside them.
ExtremalReport extremal_report(const PerturbationSpec& pert, int k);

}  // namespace mops
