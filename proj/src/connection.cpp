#include "mops/connection.hpp"

#include <sstream>

namespace mops {

std::string_view to_string(Basis b) { return b == Basis::second_kind ? "second_kind" : "canonical"; }
std::string_view to_string(Method m) { return m == Method::recurrence ? "recurrence" : "closed_form"; }

Basis parse_basis(std::string_view s) {
  if (s == "second_kind") return Basis::second_kind;
  if (s == "canonical") return Basis::canonical;
  throw Error(ErrorKind::Parse, "unknown basis '" + std::string(s) + "'");
}

Method parse_method(std::string_view s) {
  if (s == "recurrence") return Method::recurrence;
  if (s == "closed_form") return Method::closed_form;
  throw Error(ErrorKind::Parse, "unknown method '" + std::string(s) + "'");
}

std::string_view param_name(PerturbationKind kind) {
  return kind == PerturbationKind::translation ? "mu" : "lambda";
}

CCTable::CCTable(int n_max, Basis basis, Method method) : n_max_(n_max), basis_(basis), method_(method) {
  if (n_max < 0 || n_max > kMaxTableOrder) {
    throw Error(ErrorKind::InvalidArgument, "n_max must lie in [0, " + std::to_string(kMaxTableOrder) + "]");
  }
  rows_.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows_[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    rows_[static_cast<size_t>(n)][static_cast<size_t>(n)] = AffineScalar(1);
  }
}

AffineScalar CCTable::at(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > n) return AffineScalar();
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

void CCTable::set(int n, int m, AffineScalar v) {
  if (n < 0 || n > n_max_ || m < 0 || m > n) throw Error(ErrorKind::InvalidArgument, "CC index out of range");
  rows_[static_cast<size_t>(n)][static_cast<size_t>(m)] = std::move(v);
}

CCTable CCTable::instantiate(const Rational& value) const {
  CCTable t = *this;
  for (auto& row : t.rows_) {
    for (auto& e : row) e = AffineScalar(e.instantiate(value));
  }
  return t;
}

int CCTable::row_support(int n) const {
  int count = 0;
  for (const auto& e : rows_.at(static_cast<size_t>(n))) count += e.is_zero() ? 0 : 1;
  return count;
}

CCTable cc_recurrence(const RecurrenceSpec& tilde, const RecurrenceSpec& base, int n_max) {
  const Basis b = base == monomial_spec() ? Basis::canonical : Basis::second_kind;
  CCTable t(n_max, b, Method::recurrence);
  for (int n = 1; n <= n_max; ++n) {
    if (tilde.regular && n >= 2 && tilde.gamma_at(n - 1).is_zero()) {
      throw Error(ErrorKind::NonRegular, "gamma_" + std::to_string(n - 1) + " = 0");
    }
    for (int m = 0; m < n; ++m) {
      AffineScalar v = affine_mul(base.beta_at(m) - tilde.beta_at(n - 1), t.at(n - 1, m));
      v -= affine_mul(tilde.gamma_at(n - 1), t.at(n - 2, m));
      v += affine_mul(base.gamma_at(m + 1), t.at(n - 1, m + 1));
      v += t.at(n - 1, m - 1);
      t.set(n, m, std::move(v));
    }
  }
  return t;
}

CCTable cc_closed_translation(int r, int n_max) {
  if (r < 0) throw Error(ErrorKind::InvalidOrder, "translation needs r >= 0");
  CCTable t(n_max, Basis::second_kind, Method::closed_form);
  for (int i = 1; i <= r + 1; ++i) {
    const int d = 2 * i - 1;
    const AffineScalar v(Rational(0), -Rational::inv_pow4(i - 1));
    for (int n = r + i; n <= n_max; ++n) t.set(n, n - d, v);
  }
  return t;
}

CCTable cc_closed_dilatation(int r, int n_max) {
  if (r < 1) throw Error(ErrorKind::InvalidOrder, "dilatation needs r >= 1");
  CCTable t(n_max, Basis::second_kind, Method::closed_form);
  for (int i = 1; i <= r; ++i) {
    const Rational s = Rational::inv_pow4(i);
    const AffineScalar v(s, -s);
    for (int n = r + i; n <= n_max; ++n) t.set(n, n - 2 * i, v);
  }
  return t;
}

namespace {

Rational sgn_pow(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational c_even(long mu, long nu) { return canonical_cheb_coeff(static_cast<int>(2 * mu), static_cast<int>(2 * nu)); }
Rational c_odd(long mu, long nu) {
  return canonical_cheb_coeff(static_cast<int>(2 * mu + 1), static_cast<int>(2 * nu + 1));
}

// sum_{mu=lo}^{hi} 4^mu C_{2mu(+1), 2nu(+1)}
Rational c_sum(long lo, long hi, long nu, bool odd) {
  Rational s;
  for (long mu = lo; mu <= hi; ++mu) s += Rational::pow2(2 * mu) * (odd ? c_odd(mu, nu) : c_even(mu, nu));
  return s;
}

// sum_{mu=lo}^{hi} (-1)^{mu-nu} binom(mu+nu(+1), mu-nu)
Rational binom_sum(long lo, long hi, long nu, bool odd) {
  Rational s;
  for (long mu = lo; mu <= hi; ++mu) s += sgn_pow(mu - nu) * binomial(mu + nu + (odd ? 1 : 0), mu - nu);
  return s;
}

// C_{n,m} written through binomials: even (2K, 2nu) or odd (2K+1, 2nu+1).
Rational c_binomial(long K, long nu, bool odd) {
  return sgn_pow(K - nu) * Rational::inv_pow4(K - nu) * binomial(K + nu + (odd ? 1 : 0), K - nu);
}

AffineScalar minus_p(const Rational& s) { return {Rational(0), -s}; }
AffineScalar one_minus_p(const Rational& s) { return {s, -s}; }

// Translation, C-form (theorem in the canonical basis).
AffineScalar trans_c_form(int r, int k, int m) {
  if (k <= r || (k - m) % 2 == 0) return AffineScalar(canonical_cheb_coeff(k, m));
  if (k <= 2 * r) {
    if (k % 2 == 0) {
      const long kp = k / 2, nu = (m - 1) / 2;
      const long lo = nu <= r - kp ? r - kp : nu;
      return minus_p(Rational::inv_pow4(kp - 1) * c_sum(lo, kp - 1, nu, true));
    }
    const long kp = (k - 1) / 2, nu = m / 2;
    const long lo = nu <= r - kp ? r - kp : nu;
    return minus_p(Rational::inv_pow4(kp) * c_sum(lo, kp, nu, false));
  }
  if (k % 2 == 1) {
    const long N = (k - 1) / 2, n = N - r, nu = m / 2;
    const long lo = nu <= n ? n : nu;
    return minus_p(Rational::inv_pow4(N) * c_sum(lo, N, nu, false));
  }
  const long N = k / 2 - 1, n = N - r, nu = (m - 1) / 2;
  const long lo = nu <= n ? n : nu;
  return minus_p(Rational::inv_pow4(N) * c_sum(lo, N, nu, true));
}

// Translation, binomial form.
AffineScalar trans_binomial(int r, int k, int m) {
  if ((k - m) % 2 == 0) return AffineScalar(c_binomial(k / 2, m / 2, k % 2 == 1));
  if (k <= r) return AffineScalar();
  if (k <= 2 * r) {
    if (k % 2 == 0) {
      const long kp = k / 2, nu = (m - 1) / 2;
      const long lo = nu <= r - kp - 1 ? r - kp : nu;
      return minus_p(Rational::inv_pow4(kp - nu - 1) * binom_sum(lo, kp - 1, nu, true));
    }
    const long kp = (k - 1) / 2, nu = m / 2;
    const long lo = nu <= r - kp - 1 ? r - kp : nu;
    return minus_p(Rational::inv_pow4(kp - nu) * binom_sum(lo, kp, nu, false));
  }
  if (k % 2 == 1) {
    const long N = (k - 1) / 2, n = N - r, nu = m / 2;
    const long lo = nu <= n - 1 ? n : nu;
    return minus_p(Rational::inv_pow4(N - nu) * binom_sum(lo, N, nu, false));
  }
  const long N = k / 2 - 1, n = N - r, nu = (m - 1) / 2;
  const long lo = nu <= n - 1 ? n : nu;
  return minus_p(Rational::inv_pow4(N - nu) * binom_sum(lo, N, nu, true));
}

// Dilatation, C-form.
AffineScalar dil_c_form(int r, int k, int m) {
  if ((k - m) % 2 != 0) return AffineScalar();
  const AffineScalar c(canonical_cheb_coeff(k, m));
  if (k <= r) return c;
  const bool odd = k % 2 == 1;
  const long nu = m / 2;
  long K, lo, hi;
  if (k <= 2 * r - 1) {
    K = k / 2;
    const long L = odd ? r - K - 1 : r - K;
    lo = nu <= L ? L : nu;
    hi = K - 1;
  } else {
    K = k / 2;
    const long n = K - r;
    lo = nu <= n ? n : nu;
    hi = K - 1;
  }
  return c + one_minus_p(Rational::inv_pow4(K) * c_sum(lo, hi, nu, odd));
}

// Dilatation, binomial form.
AffineScalar dil_binomial(int r, int k, int m) {
  if ((k - m) % 2 != 0) return AffineScalar();
  const bool odd = k % 2 == 1;
  const long K = k / 2, nu = m / 2;
  const Rational head = c_binomial(K, nu, odd);
  if (k <= r) return AffineScalar(head);
  long lo;
  if (k <= 2 * r - 1) {
    // split points nu <= r-k'-1 (even k) and nu <= r-k'-2 (odd k)
    const long L = odd ? r - K - 1 : r - K;
    lo = nu <= L - 1 ? L : nu;
  } else {
    const long n = K - r;
    lo = nu <= n - 1 ? n : nu;
  }
  const Rational scale = Rational::inv_pow4(K - nu);
  return AffineScalar(head) + one_minus_p(scale * binom_sum(lo, K - 1, nu, odd));
}

template <typename F, typename G>
CCTable canonical_table(int n_max, CanonicalPath path, F c_form, G binom) {
  CCTable t(n_max, Basis::canonical, Method::closed_form);
  for (int k = 1; k <= n_max; ++k) {
    for (int m = 0; m < k; ++m) {
      if (path == CanonicalPath::c_form) {
        t.set(k, m, c_form(k, m));
      } else if (path == CanonicalPath::binomial) {
        t.set(k, m, binom(k, m));
      } else {
        AffineScalar a = c_form(k, m);
        if (a != binom(k, m)) {
          throw Error(ErrorKind::Internal, "canonical C-form and binomial paths disagree at (" +
                                               std::to_string(k) + "," + std::to_string(m) + ")");
        }
        t.set(k, m, std::move(a));
      }
    }
  }
  return t;
}

}  // namespace

CCTable cc_canonical_translation(int r, int n_max, CanonicalPath path) {
  if (r < 0) throw Error(ErrorKind::InvalidOrder, "translation needs r >= 0");
  return canonical_table(
      n_max, path, [r](int k, int m) { return trans_c_form(r, k, m); },
      [r](int k, int m) { return trans_binomial(r, k, m); });
}

CCTable cc_canonical_dilatation(int r, int n_max, CanonicalPath path) {
  if (r < 1) throw Error(ErrorKind::InvalidOrder, "dilatation needs r >= 1");
  return canonical_table(
      n_max, path, [r](int k, int m) { return dil_c_form(r, k, m); },
      [r](int k, int m) { return dil_binomial(r, k, m); });
}

std::vector<Polynomial> reconstruct(const CCTable& table, const std::vector<Polynomial>& basis) {
  if (static_cast<int>(basis.size()) < table.n_max() + 1) {
    throw Error(ErrorKind::InvalidArgument, "basis shorter than the table");
  }
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(table.n_max()) + 1);
  for (int n = 0; n <= table.n_max(); ++n) {
    Polynomial p;
    for (int m = 0; m <= n; ++m) {
      const AffineScalar c = table.at(n, m);
      if (!c.is_zero()) p += c * basis[static_cast<size_t>(m)];
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string render_text(const CCTable& table, std::string_view name) {
  std::ostringstream os;
  os << "n\\m";
  for (int m = 0; m <= table.n_max(); ++m) os << '\t' << m;
  os << '\n';
  for (int n = 0; n <= table.n_max(); ++n) {
    os << n;
    for (int m = 0; m <= n; ++m) os << '\t' << table.at(n, m).symbolic(name);
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const CCTable& table, std::string_view name) {
  std::ostringstream os;
  os << "n,m,value,const,lin\n";
  for (int n = 0; n <= table.n_max(); ++n) {
    for (int m = 0; m <= n; ++m) {
      const AffineScalar e = table.at(n, m);
      os << n << ',' << m << ',' << e.symbolic(name) << ',' << e.constant().str() << ',' << e.linear().str()
         << '\n';
    }
  }
  return os.str();
}

}  // namespace mops
