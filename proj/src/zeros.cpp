#include "mops/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mops/connection.hpp"

namespace mops {

// ------------------------------------------------------------ Jacobi / discs

SymTridiagonal jacobi(const RecurrenceSpec& spec, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "jacobi needs n >= 1");
  SymTridiagonal j;
  for (int i = 0; i < n; ++i) j.diag.push_back(spec.beta_at(i).as_rational());
  // One radicand for the whole matrix: 4*gamma of the first non-square gamma.
  Rational radicand(0);
  for (int i = 1; i < n; ++i) {
    const Rational g = spec.gamma_at(i).as_rational();
    if (g.sign() <= 0) {
      throw Error(ErrorKind::NonPositiveGamma, "gamma_" + std::to_string(i) + " = " + g.pretty() + " <= 0");
    }
    if (radicand.is_zero() && !g.exact_sqrt()) radicand = g * Rational(4);
  }
  for (int i = 1; i < n; ++i) {
    const Rational g = spec.gamma_at(i).as_rational();
    auto a = QuadExt::sqrt_in(g, radicand);
    if (!a) throw Error(ErrorKind::InvalidArgument, "off-diagonal outside Q(sqrt(" + radicand.pretty() + "))");
    j.offdiag.push_back(*a);
  }
  return j;
}

bool GershgorinRegion::contains(double x, double slack) const {
  return std::any_of(intervals.begin(), intervals.end(), [&](const QInterval& iv) {
    return iv.lo.to_double() - slack <= x && x <= iv.hi.to_double() + slack;
  });
}

GershgorinRegion merge_intervals(std::vector<QInterval> parts) {
  std::sort(parts.begin(), parts.end(), [](const QInterval& a, const QInterval& b) {
    const auto c = quad_compare(a.lo, b.lo);
    return c != 0 ? c < 0 : quad_less(a.hi, b.hi);
  });
  GershgorinRegion out;
  for (auto& iv : parts) {
    if (!out.intervals.empty() && quad_less_equal(iv.lo, out.intervals.back().hi)) {
      if (quad_less(out.intervals.back().hi, iv.hi)) out.intervals.back().hi = iv.hi;
    } else {
      out.intervals.push_back(std::move(iv));
    }
  }
  return out;
}

GershgorinRegion gershgorin(const RecurrenceSpec& spec, int n) {
  const SymTridiagonal j = jacobi(spec, n);
  std::vector<QInterval> discs;
  for (int i = 0; i < n; ++i) {
    QuadExt radius;
    if (i > 0) radius = radius + j.offdiag[static_cast<size_t>(i) - 1];
    if (i + 1 < n) radius = radius + j.offdiag[static_cast<size_t>(i)];
    const QuadExt c(j.diag[static_cast<size_t>(i)]);
    discs.push_back({c - radius, c + radius});
  }
  return merge_intervals(std::move(discs));
}

// --------------------------------------------------------- exact polynomials

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending, trimmed
using QPoly = std::vector<mpq_class>;

template <typename P>
void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <typename P>
int deg(const P& p) {
  return static_cast<int>(p.size()) - 1;
}

template <typename P>
P derivative(const P& p) {
  P d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

QPoly to_qpoly(const Polynomial& p) {
  QPoly q;
  for (const auto& r : p.rational_coeffs()) q.push_back(r.value());
  return q;
}

void make_monic(QPoly& p) {
  if (p.empty()) return;
  const mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
}

// a = q*b + r over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lc = b.back();
  for (int i = deg(r); i >= deg(b) && !r.empty(); i = deg(r)) {
    const mpq_class f = r[static_cast<size_t>(i)] / lc;
    const int s = i - deg(b);
    q[static_cast<size_t>(s)] = f;
    for (size_t j = 0; j < b.size(); ++j) r[static_cast<size_t>(s) + j] -= f * b[j];
    r[static_cast<size_t>(i)] = 0;
    trim(r);
  }
  trim(q);
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// Yun: f = prod a_i^i with a_i square-free and pairwise coprime.
std::vector<std::pair<QPoly, int>> yun(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  const QPoly fp = derivative(f);
  const QPoly a0 = qgcd(f, fp);
  QPoly b = exact_div(f, a0);
  QPoly c = exact_div(fp, a0);
  QPoly d = sub(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    QPoly a = qgcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = sub(c, derivative(b));
    if (deg(a) > 0) out.emplace_back(std::move(a), i);
  }
  return out;
}

ZPoly primitive(const QPoly& q) {
  mpz_class l = 1;
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : q) z.push_back(mpz_class(c.get_num() * (l / c.get_den())));
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1) {
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  trim(z);
  return z;
}

void remove_content(ZPoly& z) {
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly prem(ZPoly a, const ZPoly& b) {
  const mpz_class& lc = b.back();
  const int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    const mpz_class f = i < static_cast<int>(a.size()) ? a[static_cast<size_t>(i)] : mpz_class(0);
    for (auto& c : a) c *= lc;
    if (f != 0) {
      const int s = i - db;
      for (size_t j = 0; j < b.size(); ++j) a[static_cast<size_t>(s) + j] -= f * b[j];
    }
    if (i < static_cast<int>(a.size())) a[static_cast<size_t>(i)] = 0;
  }
  trim(a);
  return a;
}

// Sign of z(p/q), q > 0, by homogenized Horner in Z.
int sign_at(const ZPoly& z, const Rational& x) {
  if (z.empty()) return 0;
  const mpz_class p = x.numerator();
  const mpz_class q = x.denominator();
  mpz_class acc = z.back();
  mpz_class qp = 1;
  for (size_t i = z.size() - 1; i-- > 0;) {
    qp *= q;
    acc = acc * p + z[i] * qp;
  }
  return sgn(acc);
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

struct SturmChain {
  ZPoly f;
  std::vector<ZPoly> chain;
  int multiplicity = 1;
  Rational bound;  // all roots strictly inside (-bound, bound)

  explicit SturmChain(const QPoly& q, int mult) : f(primitive(q)), multiplicity(mult) {
    chain.push_back(f);
    ZPoly d = derivative(f);
    remove_content(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2) {
      const ZPoly& a = chain[chain.size() - 2];
      const ZPoly& b = chain.back();
      ZPoly r = prem(a, b);
      if (r.empty()) break;
      // Negate, and undo a negative lc(b)^(delta+1).
      const int delta = deg(a) - deg(b);
      const bool flip = sgn(b.back()) < 0 && (delta + 1) % 2 == 1;
      if (!flip) {
        for (auto& c : r) c = -c;
      }
      remove_content(r);
      chain.push_back(std::move(r));
    }
    // Cauchy bound rounded up to a power of two.
    mpq_class m = 0;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      mpq_class v(abs(f[i]), abs(f.back()));
      v.canonicalize();
      if (v > m) m = v;
    }
    Rational b(1);
    while (b <= Rational(mpq_class(m + 1))) b *= Rational(2);
    bound = b;
  }

  int v_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sign_at(p, x));
    return variations(s);
  }
  int v_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(sgn(p.back()));
    return variations(s);
  }
  int v_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(deg(p) % 2 == 0 ? sgn(p.back()) : -sgn(p.back()));
    return variations(s);
  }
  // distinct roots in (a, b]
  int count(const Rational& a, const Rational& b) const { return v_at(a) - v_at(b); }
};

}  // namespace

struct RootCounter::Impl {
  int degree = 0;
  std::vector<SturmChain> factors;
};

RootCounter::RootCounter(const Polynomial& p) : impl_(std::make_unique<Impl>()) {
  if (p.degree() < 0) throw Error(ErrorKind::InvalidArgument, "root counting on the zero polynomial");
  impl_->degree = p.degree();
  if (p.degree() == 0) return;
  for (auto& [a, m] : yun(to_qpoly(p))) impl_->factors.emplace_back(a, m);
}

RootCounter::~RootCounter() = default;
RootCounter::RootCounter(RootCounter&&) noexcept = default;
RootCounter& RootCounter::operator=(RootCounter&&) noexcept = default;

int RootCounter::degree() const { return impl_->degree; }

int RootCounter::count(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  int n = 0;
  for (const auto& f : impl_->factors) n += f.multiplicity * f.count(a, b);
  return n;
}

int RootCounter::count_above(const Rational& a) const {
  int n = 0;
  for (const auto& f : impl_->factors) n += f.multiplicity * (f.v_at(a) - f.v_pos_inf());
  return n;
}

int RootCounter::count_at_most(const Rational& b) const {
  int n = 0;
  for (const auto& f : impl_->factors) n += f.multiplicity * (f.v_neg_inf() - f.v_at(b));
  return n;
}

int RootCounter::total_real() const {
  int n = 0;
  for (const auto& f : impl_->factors) n += f.multiplicity * (f.v_neg_inf() - f.v_pos_inf());
  return n;
}

std::vector<RootCounter::Isolated> RootCounter::isolate(long bits) const {
  const Rational target = Rational::pow2(-bits);
  std::vector<Isolated> out;
  for (const auto& f : impl_->factors) {
    struct Cell {
      Rational lo, hi;
      int n;
      bool hi_excluded;  // hi is a root already reported by the parent split
    };
    std::vector<Cell> stack{{-f.bound, f.bound, f.v_neg_inf() - f.v_pos_inf(), false}};
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      if (c.n <= 0) continue;
      if (c.n == 1) {
        int s_hi = sign_at(f.f, c.hi);
        if (s_hi == 0 && !c.hi_excluded) {
          out.push_back({{c.hi, c.hi}, f.multiplicity});
          continue;
        }
        // Just below an excluded simple root f has the opposite sign of f'.
        if (s_hi == 0) s_hi = -sign_at(f.chain[1], c.hi);
        bool exact = false;
        while (c.hi - c.lo > target) {
          const Rational mid = (c.lo + c.hi) / Rational(2);
          const int s = sign_at(f.f, mid);
          if (s == 0) {
            out.push_back({{mid, mid}, f.multiplicity});
            exact = true;
            break;
          }
          if (s == s_hi) {
            c.hi = mid;
          } else {
            c.lo = mid;
          }
        }
        if (!exact) out.push_back({{c.lo, c.hi}, f.multiplicity});
        continue;
      }
      const Rational mid = (c.lo + c.hi) / Rational(2);
      const int v_lo = f.v_at(c.lo), v_mid = f.v_at(mid), v_hi = f.v_at(c.hi);
      const int right = v_mid - v_hi - (c.hi_excluded ? 1 : 0);
      if (sign_at(f.f, mid) == 0) {
        out.push_back({{mid, mid}, f.multiplicity});
        stack.push_back({c.lo, mid, v_lo - v_mid - 1, true});
      } else {
        stack.push_back({c.lo, mid, v_lo - v_mid, false});
      }
      stack.push_back({mid, c.hi, right, c.hi_excluded});
    }
  }
  std::sort(out.begin(), out.end(), [](const Isolated& a, const Isolated& b) { return a.iv.lo < b.iv.lo; });
  return out;
}

std::vector<RealRoot> real_roots(const Polynomial& p, long bits) {
  if (p.degree() < 1) return {};
  const RootCounter rc(p);
  std::vector<RealRoot> out;
  for (const auto& iso : rc.isolate(bits)) {
    const double approx = ((iso.iv.lo + iso.iv.hi) / Rational(2)).to_double();
    for (int i = 0; i < iso.multiplicity; ++i) out.push_back({iso.iv, approx});
  }
  return out;
}

// ---------------------------------------------------------- complex roots

double relative_residual(const Polynomial& p, std::complex<double> z) {
  const auto c = p.rational_coeffs();
  std::complex<long double> zz(z.real(), z.imag());
  std::complex<long double> acc = 0;
  long double scale = 0;
  const long double az = std::abs(zz);
  for (size_t i = c.size(); i-- > 0;) {
    const long double a = static_cast<long double>(c[i].to_double());
    acc = acc * zz + a;
    scale = scale * az + std::fabs(a);
  }
  return scale == 0 ? 0.0 : static_cast<double>(std::abs(acc) / scale);
}

namespace {

template <typename T>
void horner(const std::vector<T>& a, std::complex<T> z, std::complex<T>& p, std::complex<T>& dp) {
  p = 0;
  dp = 0;
  for (size_t i = a.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
}

std::vector<std::complex<double>> aberth(const std::vector<double>& a, double tol) {
  const int n = static_cast<int>(a.size()) - 1;
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(a[static_cast<size_t>(i)] / a.back()));
  const double radius = 1.0 + bound;
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * M_PI * k / n + 0.4;
    z[static_cast<size_t>(k)] = std::polar(radius, t);
  }
  std::vector<bool> done(static_cast<size_t>(n), false);
  for (int iter = 0; iter < 200; ++iter) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<size_t>(k)]) continue;
      std::complex<double> p, dp;
      horner(a, z[static_cast<size_t>(k)], p, dp);
      double scale = 0, az = std::abs(z[static_cast<size_t>(k)]);
      for (size_t i = a.size(); i-- > 0;) scale = scale * az + std::fabs(a[i]);
      if (std::abs(p) <= tol * 1e-3 * scale) {
        done[static_cast<size_t>(k)] = true;
        continue;
      }
      all = false;
      const std::complex<double> ratio = p / dp;
      std::complex<double> s = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) s += 1.0 / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
      }
      const std::complex<double> w = ratio / (1.0 - ratio * s);
      z[static_cast<size_t>(k)] -= w;
      if (std::abs(w) <= 1e-16 * std::max(1.0, std::abs(z[static_cast<size_t>(k)]))) {
        done[static_cast<size_t>(k)] = true;
      }
    }
    if (all) break;
  }
  return z;
}

}  // namespace

ZeroReport all_roots(const Polynomial& p, double tol, long bits) {
  if (p.degree() < 1) return {};
  ZeroReport rep;
  rep.real = real_roots(p, bits);
  rep.n_real = static_cast<int>(rep.real.size());
  const int n_complex = p.degree() - rep.n_real;
  rep.n_complex_pairs = n_complex / 2;
  if (n_complex == 0) return rep;

  const auto rc = p.rational_coeffs();
  std::vector<double> a;
  std::vector<long double> al;
  for (const auto& c : rc) {
    a.push_back(c.to_double());
    al.push_back(static_cast<long double>(c.to_double()));
  }
  auto z = aberth(a, tol);
  for (auto& root : z) {
    std::complex<long double> zl(root.real(), root.imag());
    for (int it = 0; it < 4; ++it) {
      std::complex<long double> pv, dv;
      horner(al, zl, pv, dv);
      if (dv == std::complex<long double>(0)) break;
      zl -= pv / dv;
    }
    const std::complex<double> polished(static_cast<double>(zl.real()), static_cast<double>(zl.imag()));
    if (relative_residual(p, polished) <= relative_residual(p, root)) root = polished;
  }
  // Greedily pair each exact real root with its nearest approximation; the rest are complex.
  std::vector<bool> used(z.size(), false);
  for (const auto& r : rep.real) {
    size_t best = z.size();
    double bd = 0;
    for (size_t i = 0; i < z.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(z[i] - std::complex<double>(r.approx, 0.0));
      if (best == z.size() || d < bd) {
        best = i;
        bd = d;
      }
    }
    used[best] = true;
  }
  std::vector<std::complex<double>> rest;
  for (size_t i = 0; i < z.size(); ++i) {
    if (!used[i]) rest.push_back(z[i]);
  }
  std::sort(rest.begin(), rest.end(), [](auto x, auto y) { return x.imag() > y.imag(); });
  const size_t half = rest.size() / 2;
  std::vector<bool> taken(rest.size(), false);
  for (size_t i = 0; i < half; ++i) {
    const auto u = rest[i];
    size_t best = rest.size();
    double bd = 0;
    for (size_t j = half; j < rest.size(); ++j) {
      if (taken[j]) continue;
      const double d = std::abs(u - std::conj(rest[j]));
      if (best == rest.size() || d < bd) {
        best = j;
        bd = d;
      }
    }
    taken[best] = true;
    const auto l = rest[best];
    rep.complex_pairs.emplace_back((u.real() + l.real()) / 2, std::fabs(u.imag() - l.imag()) / 2);
  }
  for (const auto& c : rep.complex_pairs) {
    if (relative_residual(p, c) > tol) {
      throw Error(ErrorKind::PrecisionExhausted, "complex root polishing stalled above tolerance");
    }
  }
  std::sort(rep.complex_pairs.begin(), rep.complex_pairs.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return rep;
}

// ------------------------------------------------------------- origin

OriginReport origin_report(const PerturbationSpec& pert, int n) {
  pert.validate();
  if (pert.formal()) throw Error(ErrorKind::NotConcrete, "origin_report needs a concrete parameter");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const CCTable t = pert.kind == PerturbationKind::translation
                        ? cc_canonical_translation(pert.order, n, CanonicalPath::c_form)
                        : cc_canonical_dilatation(pert.order, n, CanonicalPath::c_form);
  const Rational& v = *pert.param;
  OriginReport rep;
  rep.value_at_0 = t.at(n, 0).instantiate(v);
  rep.sum_of_zeros = n == 0 ? Rational(0) : -t.at(n, n - 1).instantiate(v);
  rep.product_of_zeros = n % 2 == 0 ? rep.value_at_0 : -rep.value_at_0;
  rep.origin_is_zero = rep.value_at_0.is_zero();
  return rep;
}

bool origin_zero_by_parity(PerturbationKind kind, int r, int n) {
  if (n % 2 == 0) return false;
  if (kind == PerturbationKind::dilatation) return true;
  if (r % 2 == 1) return true;
  return n < r;
}

// ----------------------------------------------------------- extremal zeros

namespace {

// Zeros strictly above an irrational-or-rational point known not to be a root.
int count_beyond(const RootCounter& rc, const CosPoint& x, bool above) {
  for (long bits = 64; bits <= kMaxPrecisionBits - 64; bits *= 2) {
    const Enclosure e = cos_enclosure(x, bits);
    if (above) {
      const int a = rc.count_above(e.lo), b = rc.count_above(e.hi);
      if (a == b) return b;
    } else {
      const int a = rc.count_at_most(e.lo), b = rc.count_at_most(e.hi);
      if (a == b) return a;
    }
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not separate perturbed zeros from " + x.str());
}

}  // namespace

ExtremalReport extremal_report(const PerturbationSpec& pert, int k) {
  pert.validate();
  if (pert.formal()) throw Error(ErrorKind::NotConcrete, "extremal_report needs a concrete parameter");
  if (k < pert.order + 1) throw Error(ErrorKind::InvalidArgument, "extremal_report needs k >= r+1");
  const bool trivial = pert.kind == PerturbationKind::translation ? pert.param->is_zero()
                                                                  : *pert.param == Rational(1);
  if (trivial) throw Error(ErrorKind::InvalidArgument, "extremal_report needs a nontrivial perturbation");
  const Polynomial p = generate(perturbed_spec(pert), k)[static_cast<size_t>(k)];
  const CosPoint greatest(1, k + 1), smallest(k, k + 1);
  ExtremalReport rep;
  rep.sign_at_greatest = certified_sign(p, greatest);
  rep.sign_at_smallest = certified_sign(p, smallest);
  const RootCounter rc(p);
  rep.n_above = count_beyond(rc, greatest, true);
  rep.n_below = count_beyond(rc, smallest, false);
  return rep;
}

}  // namespace mops
