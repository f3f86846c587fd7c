#include "mops/polynomial.hpp"

#include <algorithm>

namespace mops {

Polynomial::Polynomial(std::vector<AffineScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(AffineScalar c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(int k) {
  std::vector<AffineScalar> c(static_cast<size_t>(k) + 1);
  c.back() = AffineScalar(1);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_rationals(const std::vector<Rational>& coeffs) {
  return Polynomial(std::vector<AffineScalar>(coeffs.begin(), coeffs.end()));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == AffineScalar(1); }

bool Polynomial::is_concrete() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const AffineScalar& c) { return c.is_rational(); });
}

AffineScalar Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return AffineScalar();
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->as_rational();
  return acc;
}

double Polynomial::evaluate_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->as_rational().to_double();
  return acc;
}

Polynomial Polynomial::instantiate(const Rational& value) const {
  std::vector<AffineScalar> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.emplace_back(a.instantiate(value));
  return Polynomial(std::move(c));
}

std::vector<Rational> Polynomial::rational_coeffs() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a.as_rational());
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<AffineScalar> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * AffineScalar(static_cast<long>(i));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::mul_x() const {
  if (is_zero()) return {};
  std::vector<AffineScalar> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back();
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reflect() const {
  auto c = coeffs_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<AffineScalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += affine_mul(a.coeffs_[i], b.coeffs_[j]);
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const AffineScalar& s, const Polynomial& p) {
  std::vector<AffineScalar> c;
  c.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) c.push_back(affine_mul(s, a));
  return Polynomial(std::move(c));
}

std::string Polynomial::pretty(std::string_view name) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const AffineScalar& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string s = c.symbolic(name);
    const bool simple = c.is_rational() || c.constant().is_zero();
    bool negative = false;
    if (simple && s.front() == '-') {
      negative = true;
      s.erase(0, 1);
    }
    if (!simple) s = "(" + s + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const bool unit = s == "1";
    if (i == 0) {
      out += s;
    } else {
      if (!unit) out += s + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace mops
