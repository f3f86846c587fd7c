#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "mops/error.hpp"

namespace mops {

/// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "3", "-1/2", "+7/14" (reduced on construction).
  static Rational parse(std::string_view text);
  /// 2^e for any integer e.
  static Rational pow2(long e);
  /// 4^-e, the ubiquitous scale of the second-kind recurrence.
  static Rational inv_pow4(long e);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  Rational abs() const;

  /// Exact square root when this is the square of a rational.
  std::optional<Rational> exact_sqrt() const;

  /// Serialized form "num/den", denominator always present.
  std::string str() const;
  /// Human form: "3", "-1/2".
  std::string pretty() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// constant + linear * p for one formal parameter p (mu_r or lambda_r).
class AffineScalar {
 public:
  AffineScalar() = default;
  AffineScalar(Rational constant) : c_(std::move(constant)) {}  // NOLINT
  AffineScalar(long constant) : c_(constant) {}                 // NOLINT
  AffineScalar(Rational constant, Rational linear)
      : c_(std::move(constant)), l_(std::move(linear)) {}

  /// The bare formal parameter, 0 + 1*p.
  static AffineScalar parameter() { return {Rational(0), Rational(1)}; }

  const Rational& constant() const { return c_; }
  const Rational& linear() const { return l_; }
  bool is_rational() const { return l_.is_zero(); }
  bool is_zero() const { return c_.is_zero() && l_.is_zero(); }

  /// The rational value; throws NotConcrete when the parameter is still present.
  const Rational& as_rational() const;
  Rational instantiate(const Rational& value) const { return c_ + l_ * value; }

  AffineScalar operator-() const { return {-c_, -l_}; }
  AffineScalar& operator+=(const AffineScalar& o);
  AffineScalar& operator-=(const AffineScalar& o);
  AffineScalar& operator*=(const AffineScalar& o);
  AffineScalar& operator/=(const Rational& o);

  friend AffineScalar operator+(AffineScalar a, const AffineScalar& b) { return a += b; }
  friend AffineScalar operator-(AffineScalar a, const AffineScalar& b) { return a -= b; }
  friend AffineScalar operator*(AffineScalar a, const AffineScalar& b) { return a *= b; }
  friend AffineScalar operator/(AffineScalar a, const Rational& b) { return a /= b; }

  friend bool operator==(const AffineScalar& a, const AffineScalar& b) = default;

  /// Symbolic rendering with the parameter spelled `name`, e.g. "-mu/4", "(1-lambda)/16".
  std::string symbolic(std::string_view name) const;

 private:
  Rational c_;
  Rational l_;
};

/// Exact product. Throws AffineOverflow when both operands carry the parameter.
AffineScalar affine_mul(const AffineScalar& x, const AffineScalar& y);
Rational instantiate(const AffineScalar& x, const Rational& value);

/// a + b*sqrt(radicand), radicand >= 0. Perfect-square radicands are folded into a,
/// so radicand == 0 exactly when the value is rational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT
  QuadExt(long a) : a_(a) {}                 // NOLINT
  QuadExt(Rational a, Rational b, Rational radicand);

  /// sqrt(value) as b*sqrt(radicand) with the given radicand, or rational when possible.
  static std::optional<QuadExt> sqrt_in(const Rational& value, const Rational& radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return rad_; }
  bool is_rational() const { return b_.is_zero(); }
  double to_double() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, rad_); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
  friend QuadExt operator*(const QuadExt& x, const Rational& s) {
    return QuadExt(x.a_ * s, x.b_ * s, x.rad_);
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) = default;

  std::string pretty() const;

 private:
  Rational a_;
  Rational b_;
  Rational rad_;
};

/// Exact three-way comparison of a + b*sqrt(s) against q: one squaring, no floating point.
std::strong_ordering quad_compare(const QuadExt& x, const Rational& q);
/// Same-radicand comparison through the difference.
std::strong_ordering quad_compare(const QuadExt& x, const QuadExt& y);

inline bool quad_less(const QuadExt& x, const QuadExt& y) { return quad_compare(x, y) < 0; }
inline bool quad_less_equal(const QuadExt& x, const QuadExt& y) { return quad_compare(x, y) <= 0; }

}  // namespace mops
