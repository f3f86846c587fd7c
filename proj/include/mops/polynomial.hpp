#pragma once

#include <string>
#include <vector>

#include "mops/numerics.hpp"

namespace mops {

/// Dense polynomial over AffineScalar, ascending coefficients, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<AffineScalar> coeffs);
  static Polynomial constant(AffineScalar c);
  /// x^k
  static Polynomial monomial(int k);
  static Polynomial from_rationals(const std::vector<Rational>& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  bool is_concrete() const;
  const std::vector<AffineScalar>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero outside the stored range.
  AffineScalar coeff(int i) const;

  /// Exact Horner; throws NotConcrete when a coefficient carries the parameter.
  Rational evaluate(const Rational& x) const;
  double evaluate_double(double x) const;
  Polynomial instantiate(const Rational& value) const;
  std::vector<Rational> rational_coeffs() const;
  Polynomial derivative() const;
  Polynomial mul_x() const;
  /// p(-x)
  Polynomial reflect() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const AffineScalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// "x^3 - mu*x^2 - 1/2*x", parameter spelled `name`.
  std::string pretty(std::string_view name = "p") const;

 private:
  void trim();
  std::vector<AffineScalar> coeffs_;
};

}  // namespace mops
