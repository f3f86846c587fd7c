#include "mops/cos_point.hpp"

#include <mpfr.h>

#include <cmath>
#include <numeric>

namespace mops {

CosPoint::CosPoint(long k, long m) {
  if (m < 1 || k < 0 || k > m) {
    throw Error(ErrorKind::InvalidArgument, "CosPoint needs 0 <= k <= m, m >= 1");
  }
  const long g = std::gcd(k, m);
  k_ = k / g;
  m_ = m / g;
}

double CosPoint::approx() const {
  if (auto v = exact_value()) return v->to_double();
  return std::sin(M_PI * static_cast<double>(m_ - 2 * k_) / static_cast<double>(2 * m_));
}

std::optional<Rational> CosPoint::exact_value() const {
  if (k_ == 0) return Rational(1);
  if (k_ == m_) return Rational(-1);
  if (k_ == 1 && m_ == 2) return Rational(0);
  if (k_ == 1 && m_ == 3) return Rational(1, 2);
  if (k_ == 2 && m_ == 3) return Rational(-1, 2);
  return std::nullopt;
}

std::string CosPoint::str() const {
  const std::string num = k_ == 0 ? "0" : (k_ == 1 ? "pi" : std::to_string(k_) + "pi");
  return "cos(" + num + (k_ == 0 || m_ == 1 ? "" : "/" + std::to_string(m_)) + ")";
}

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

Rational to_rational(const mpfr_t x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return Rational(q);
}

struct Interval {
  Mpfr lo;
  Mpfr hi;
  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

void cos_interval(const CosPoint& x, Interval& out, mpfr_prec_t prec) {
  // Angle enclosure in [0, pi), where cos is decreasing.
  Mpfr pi_lo(prec + 16), pi_hi(prec + 16), a_lo(prec + 16), a_hi(prec + 16);
  mpfr_const_pi(pi_lo.v, MPFR_RNDD);
  mpfr_const_pi(pi_hi.v, MPFR_RNDU);
  mpfr_mul_ui(a_lo.v, pi_lo.v, static_cast<unsigned long>(x.k()), MPFR_RNDD);
  mpfr_div_ui(a_lo.v, a_lo.v, static_cast<unsigned long>(x.m()), MPFR_RNDD);
  mpfr_mul_ui(a_hi.v, pi_hi.v, static_cast<unsigned long>(x.k()), MPFR_RNDU);
  mpfr_div_ui(a_hi.v, a_hi.v, static_cast<unsigned long>(x.m()), MPFR_RNDU);
  mpfr_cos(out.lo.v, a_hi.v, MPFR_RNDD);
  mpfr_cos(out.hi.v, a_lo.v, MPFR_RNDU);
}

void set_rational(Interval& out, const Rational& q) {
  mpfr_set_q(out.lo.v, q.value().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi.v, q.value().get_mpq_t(), MPFR_RNDU);
}

// acc <- acc * x + c, all outward rounded.
void horner_step(Interval& acc, const Interval& x, const Rational& c, mpfr_prec_t prec) {
  Mpfr p[4] = {Mpfr(prec), Mpfr(prec), Mpfr(prec), Mpfr(prec)};
  Mpfr q[4] = {Mpfr(prec), Mpfr(prec), Mpfr(prec), Mpfr(prec)};
  mpfr_mul(p[0].v, acc.lo.v, x.lo.v, MPFR_RNDD);
  mpfr_mul(p[1].v, acc.lo.v, x.hi.v, MPFR_RNDD);
  mpfr_mul(p[2].v, acc.hi.v, x.lo.v, MPFR_RNDD);
  mpfr_mul(p[3].v, acc.hi.v, x.hi.v, MPFR_RNDD);
  mpfr_mul(q[0].v, acc.lo.v, x.lo.v, MPFR_RNDU);
  mpfr_mul(q[1].v, acc.lo.v, x.hi.v, MPFR_RNDU);
  mpfr_mul(q[2].v, acc.hi.v, x.lo.v, MPFR_RNDU);
  mpfr_mul(q[3].v, acc.hi.v, x.hi.v, MPFR_RNDU);
  mpfr_min(acc.lo.v, p[0].v, p[1].v, MPFR_RNDD);
  mpfr_min(acc.lo.v, acc.lo.v, p[2].v, MPFR_RNDD);
  mpfr_min(acc.lo.v, acc.lo.v, p[3].v, MPFR_RNDD);
  mpfr_max(acc.hi.v, q[0].v, q[1].v, MPFR_RNDU);
  mpfr_max(acc.hi.v, acc.hi.v, q[2].v, MPFR_RNDU);
  mpfr_max(acc.hi.v, acc.hi.v, q[3].v, MPFR_RNDU);
  mpfr_add_q(acc.lo.v, acc.lo.v, c.value().get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(acc.hi.v, acc.hi.v, c.value().get_mpq_t(), MPFR_RNDU);
}

bool narrow_enough(const Enclosure& e, long bits) { return e.width() <= Rational::pow2(-bits); }

}  // namespace

Enclosure cos_enclosure(const CosPoint& x, long bits) {
  if (auto v = x.exact_value()) return {*v, *v};
  for (mpfr_prec_t prec = bits + 32; prec <= kMaxPrecisionBits; prec *= 2) {
    Interval c(prec);
    cos_interval(x, c, prec);
    Enclosure e{to_rational(c.lo.v), to_rational(c.hi.v)};
    if (narrow_enough(e, bits)) return e;
  }
  throw Error(ErrorKind::PrecisionExhausted, "cosine enclosure for " + x.str());
}

Enclosure evaluate_point(const Polynomial& p, const CosPoint& x, long bits) {
  const auto coeffs = p.rational_coeffs();
  if (auto v = x.exact_value()) {
    const Rational y = p.evaluate(*v);
    return {y, y};
  }
  if (coeffs.empty()) return {Rational(0), Rational(0)};
  // Horner loses roughly log2(degree * max|c|) bits; start above that and double.
  const long guard = 32 + 2 * static_cast<long>(coeffs.size());
  for (mpfr_prec_t prec = bits + guard; prec <= kMaxPrecisionBits; prec *= 2) {
    Interval xi(prec);
    cos_interval(x, xi, prec);
    Interval acc(prec);
    set_rational(acc, coeffs.back());
    for (size_t i = coeffs.size() - 1; i-- > 0;) horner_step(acc, xi, coeffs[i], prec);
    Enclosure e{to_rational(acc.lo.v), to_rational(acc.hi.v)};
    if (narrow_enough(e, bits)) return e;
  }
  throw Error(ErrorKind::PrecisionExhausted, "evaluation at " + x.str() + " did not reach 2^-" +
                                                 std::to_string(bits));
}

int certified_sign(const Polynomial& p, const CosPoint& x, long start_bits) {
  if (auto v = x.exact_value()) return p.evaluate(*v).sign();
  for (long bits = start_bits; bits + 64 <= kMaxPrecisionBits; bits *= 2) {
    const Enclosure e = evaluate_point(p, x, bits);
    if (const int s = e.sign(); s != 0) return s;
  }
  throw Error(ErrorKind::PrecisionExhausted, "sign at " + x.str() + " not certified");
}

}  // namespace mops
