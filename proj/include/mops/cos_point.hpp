#pragma once

#include <compare>
#include <optional>
#include <string>

#include "mops/numerics.hpp"
#include "mops/polynomial.hpp"

namespace mops {

/// cos(k*pi/m), 0 <= k <= m, stored reduced. Ordered by increasing x.
class CosPoint {
 public:
  CosPoint() = default;
  CosPoint(long k, long m);

  long k() const { return k_; }
  long m() const { return m_; }
  double approx() const;
  /// Rational value when the cosine is rational (k/m in {0, 1/3, 1/2, 2/3, 1}).
  std::optional<Rational> exact_value() const;
  bool is_origin() const { return k_ == 1 && m_ == 2; }
  std::string str() const;

  friend bool operator==(const CosPoint& a, const CosPoint& b) = default;
  /// Larger angle means smaller x.
  friend std::strong_ordering operator<=>(const CosPoint& a, const CosPoint& b) {
    return b.k_ * a.m_ <=> a.k_ * b.m_;
  }

 private:
  long k_ = 1;
  long m_ = 2;
};

/// Closed rational interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
  int sign() const { return lo.sign() > 0 ? 1 : (hi.sign() < 0 ? -1 : 0); }
  friend bool operator==(const Enclosure& a, const Enclosure& b) = default;
};

inline constexpr long kMaxPrecisionBits = 4096;

/// Rational enclosure of cos(k*pi/m) of width <= 2^-bits (exact when rational).
Enclosure cos_enclosure(const CosPoint& x, long bits);

/// Certified enclosure of p(x) of width <= 2^-bits. Throws PrecisionExhausted past the cap.
Enclosure evaluate_point(const Polynomial& p, const CosPoint& x, long bits = 60);

/// Sign of p(x), refining until the enclosure excludes 0. Returns 0 only for an exact zero
/// at a rational point; throws PrecisionExhausted when nonzero-ness cannot be certified.
int certified_sign(const Polynomial& p, const CosPoint& x, long start_bits = 60);

}  // namespace mops
