#include "mops/recurrence.hpp"

#include <algorithm>

namespace mops {

AffineScalar CoefficientSequence::at(int i) const {
  if (i < first_) return AffineScalar();
  auto it = overrides_.find(i);
  return it == overrides_.end() ? tail_ : it->second;
}

void CoefficientSequence::set(int i, const AffineScalar& v) {
  if (i < first_) throw Error(ErrorKind::InvalidOrder, "coefficient index below the sequence start");
  if (v == tail_) {
    overrides_.erase(i);
  } else {
    overrides_[i] = v;
  }
}

bool RecurrenceSpec::symmetric(int n_max) const {
  if (!beta.tail().is_zero()) return false;
  return std::all_of(beta.overrides().begin(), beta.overrides().end(), [&](const auto& kv) {
    return kv.first > n_max || kv.second.is_zero();
  });
}

std::string_view to_string(ChebyshevKind kind) {
  switch (kind) {
    case ChebyshevKind::first: return "first";
    case ChebyshevKind::second: return "second";
    case ChebyshevKind::third: return "third";
    case ChebyshevKind::fourth: return "fourth";
  }
  return "second";
}

std::string_view to_string(PerturbationKind kind) {
  return kind == PerturbationKind::translation ? "translation" : "dilatation";
}

ChebyshevKind parse_chebyshev_kind(std::string_view s) {
  if (s == "first") return ChebyshevKind::first;
  if (s == "second") return ChebyshevKind::second;
  if (s == "third") return ChebyshevKind::third;
  if (s == "fourth") return ChebyshevKind::fourth;
  throw Error(ErrorKind::Parse, "unknown Chebyshev kind '" + std::string(s) + "'");
}

PerturbationKind parse_perturbation_kind(std::string_view s) {
  if (s == "translation") return PerturbationKind::translation;
  if (s == "dilatation" || s == "dilation") return PerturbationKind::dilatation;
  throw Error(ErrorKind::Parse, "unknown perturbation kind '" + std::string(s) + "'");
}

AffineScalar PerturbationSpec::value() const {
  return param ? AffineScalar(*param) : AffineScalar::parameter();
}

void PerturbationSpec::validate() const {
  if (order < 0) throw Error(ErrorKind::InvalidOrder, "negative perturbation order");
  if (kind == PerturbationKind::dilatation) {
    if (order == 0) throw Error(ErrorKind::InvalidOrder, "dilatation needs r >= 1");
    if (param && param->is_zero()) throw Error(ErrorKind::NonRegular, "dilatation with lambda = 0");
  }
}

RecurrenceSpec chebyshev_spec(ChebyshevKind kind) {
  RecurrenceSpec s;
  s.beta = CoefficientSequence(0, AffineScalar());
  s.gamma = CoefficientSequence(1, AffineScalar(Rational(1, 4)));
  s.label = std::string(to_string(kind));
  switch (kind) {
    case ChebyshevKind::first: s.gamma.set(1, Rational(1, 2)); break;
    case ChebyshevKind::second: break;
    case ChebyshevKind::third: s.beta.set(0, Rational(1, 2)); break;
    case ChebyshevKind::fourth: s.beta.set(0, Rational(-1, 2)); break;
  }
  return s;
}

RecurrenceSpec monomial_spec() {
  RecurrenceSpec s;
  s.label = "monomial";
  s.regular = false;
  return s;
}

RecurrenceSpec apply_perturbation(const RecurrenceSpec& base, const PerturbationSpec& pert) {
  pert.validate();
  RecurrenceSpec s = base;
  const int r = pert.order;
  if (pert.kind == PerturbationKind::translation) {
    s.beta.set(r, base.beta_at(r) + pert.value());
  } else {
    s.gamma.set(r, affine_mul(pert.value(), base.gamma_at(r)));
  }
  s.label = base.label + "+" + std::string(to_string(pert.kind)) + "(r=" + std::to_string(r) + ")";
  return s;
}

RecurrenceSpec perturbed_spec(const PerturbationSpec& pert) {
  return apply_perturbation(chebyshev_spec(ChebyshevKind::second), pert);
}

std::vector<Polynomial> generate(const RecurrenceSpec& spec, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  out.push_back(Polynomial::constant(AffineScalar(1)));
  if (n_max == 0) return out;
  out.push_back(Polynomial({-spec.beta_at(0), AffineScalar(1)}));
  for (int n = 0; n + 2 <= n_max; ++n) {
    const AffineScalar g = spec.gamma_at(n + 1);
    if (spec.regular && g.is_zero()) {
      throw Error(ErrorKind::NonRegular, "gamma_" + std::to_string(n + 1) + " = 0");
    }
    const Polynomial& p1 = out[static_cast<size_t>(n) + 1];
    const Polynomial& p0 = out[static_cast<size_t>(n)];
    out.push_back(p1.mul_x() - spec.beta_at(n + 1) * p1 - g * p0);
  }
  return out;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational canonical_cheb_coeff(int n, int m) {
  if (m < 0 || m > n || (n - m) % 2 != 0) return Rational(0);
  const long h = (n - m) / 2;  // n - nu in the half-index form
  const long top = (n + m) / 2;
  Rational c = binomial(top, h) * Rational::inv_pow4(h);
  return h % 2 == 0 ? c : -c;
}

std::vector<CosPoint> closed_form_zeros(ChebyshevKind kind, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "closed_form_zeros needs n >= 1");
  std::vector<CosPoint> z;
  for (long k = 1; k <= n; ++k) {
    switch (kind) {
      case ChebyshevKind::first: z.emplace_back(2 * k - 1, 2L * n); break;
      case ChebyshevKind::second: z.emplace_back(k, n + 1L); break;
      case ChebyshevKind::third: z.emplace_back(2 * k - 1, 2L * n + 1); break;
      case ChebyshevKind::fourth: z.emplace_back(2 * k, 2L * n + 1); break;
    }
  }
  std::sort(z.begin(), z.end());
  return z;
}

AffineScalar norm_squared(const RecurrenceSpec& spec, int n) {
  AffineScalar k(1);
  for (int i = 1; i <= n; ++i) {
    const AffineScalar g = spec.gamma_at(i);
    if (g.is_zero()) throw Error(ErrorKind::NonRegular, "gamma_" + std::to_string(i) + " = 0");
    k = affine_mul(k, g);
  }
  return k;
}

}  // namespace mops
