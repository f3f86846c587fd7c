#include "mops/numerics.hpp"

#include <cctype>
#include <cmath>

namespace mops {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AffineOverflow: return "AffineOverflow";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::NonRegular: return "NonRegular";
    case ErrorKind::NonPositiveGamma: return "NonPositiveGamma";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotConcrete: return "NotConcrete";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::pow2(long e) {
  mpz_class p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(mpq_class(p));
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(mpz_class(1), p);
}

Rational Rational::inv_pow4(long e) { return pow2(-2 * e); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& n = q_.get_num();
  const mpz_class& d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

std::string Rational::pretty() const {
  if (is_integer()) return q_.get_num().get_str();
  return str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

// ------------------------------------------------------------ AffineScalar

const Rational& AffineScalar::as_rational() const {
  if (!is_rational()) throw Error(ErrorKind::NotConcrete, "value still depends on the formal parameter");
  return c_;
}

AffineScalar& AffineScalar::operator+=(const AffineScalar& o) {
  c_ += o.c_;
  l_ += o.l_;
  return *this;
}

AffineScalar& AffineScalar::operator-=(const AffineScalar& o) {
  c_ -= o.c_;
  l_ -= o.l_;
  return *this;
}

AffineScalar& AffineScalar::operator*=(const AffineScalar& o) {
  *this = affine_mul(*this, o);
  return *this;
}

AffineScalar& AffineScalar::operator/=(const Rational& o) {
  c_ /= o;
  l_ /= o;
  return *this;
}

AffineScalar affine_mul(const AffineScalar& x, const AffineScalar& y) {
  if (!x.is_rational() && !y.is_rational()) {
    throw Error(ErrorKind::AffineOverflow, "product of two parameter-dependent scalars");
  }
  if (x.is_rational()) return {x.constant() * y.constant(), x.constant() * y.linear()};
  return {x.constant() * y.constant(), x.linear() * y.constant()};
}

Rational instantiate(const AffineScalar& x, const Rational& value) { return x.instantiate(value); }

namespace {

// "mu", "-mu", "mu/4", "-3*mu/4"
std::string linear_term(const Rational& l, std::string_view name) {
  std::string out = l.sign() < 0 ? "-" : "";
  const Rational a = l.abs();
  const mpz_class num = a.numerator();
  const mpz_class den = a.denominator();
  if (num != 1) out += num.get_str() + "*";
  out += name;
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace

std::string AffineScalar::symbolic(std::string_view name) const {
  if (is_rational()) return c_.pretty();
  if (c_.is_zero()) return linear_term(l_, name);
  if (c_ == -l_) {
    // c*(1-p)
    std::string factor = "(1-" + std::string(name) + ")";
    std::string out = c_.sign() < 0 ? "-" : "";
    const Rational a = c_.abs();
    if (a.numerator() != 1) out += a.numerator().get_str() + "*";
    out += factor;
    if (a.denominator() != 1) out += "/" + a.denominator().get_str();
    return out;
  }
  std::string lin = linear_term(l_, name);
  if (lin.front() != '-') lin = "+" + lin;
  return c_.pretty() + lin;
}

// ------------------------------------------------------------------ QuadExt

QuadExt::QuadExt(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), rad_(std::move(radicand)) {
  if (rad_.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative radicand");
  if (b_.is_zero() || rad_.is_zero()) {
    b_ = Rational(0);
    rad_ = Rational(0);
    return;
  }
  if (auto root = rad_.exact_sqrt()) {
    a_ += b_ * *root;
    b_ = Rational(0);
    rad_ = Rational(0);
  }
}

std::optional<QuadExt> QuadExt::sqrt_in(const Rational& value, const Rational& radicand) {
  if (value.sign() < 0) return std::nullopt;
  if (auto root = value.exact_sqrt()) return QuadExt(*root);
  if (radicand.sign() <= 0) return std::nullopt;
  auto scale = (value / radicand).exact_sqrt();
  if (!scale) return std::nullopt;
  return QuadExt(Rational(0), *scale, radicand);
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(rad_.to_double());
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return QuadExt(x.a_ + y.a_, y.b_, y.rad_);
  if (y.is_rational()) return QuadExt(x.a_ + y.a_, x.b_, x.rad_);
  if (x.rad_ != y.rad_) throw Error(ErrorKind::InvalidArgument, "mixed radicands in QuadExt arithmetic");
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.rad_);
}

std::string QuadExt::pretty() const {
  if (is_rational()) return a_.pretty();
  std::string out = a_.is_zero() ? "" : a_.pretty() + (b_.sign() < 0 ? "-" : "+");
  if (a_.is_zero() && b_.sign() < 0) out += "-";
  const Rational bb = b_.abs();
  if (bb != Rational(1)) out += bb.pretty() + "*";
  out += "sqrt(" + rad_.pretty() + ")";
  return out;
}

namespace {

std::strong_ordering from_int(int c) {
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::strong_ordering quad_compare(const QuadExt& x, const Rational& q) {
  // x - q = b*sqrt(s) - (q - a); compare lhs = b*sqrt(s) with rhs = q - a.
  const Rational rhs = q - x.a();
  if (x.is_rational()) return from_int(-rhs.sign());
  const int sl = x.b().sign();
  const int sr = rhs.sign();
  if (sl != sr) return from_int(sl > sr ? 1 : -1);
  // Same strict sign: compare squares, reversing for negatives.
  const Rational l2 = x.b() * x.b() * x.radicand();
  const Rational r2 = rhs * rhs;
  const int c = l2 == r2 ? 0 : (l2 > r2 ? 1 : -1);
  return from_int(sl > 0 ? c : -c);
}

std::strong_ordering quad_compare(const QuadExt& x, const QuadExt& y) {
  return quad_compare(x - y, Rational(0));
}

}  // namespace mops
