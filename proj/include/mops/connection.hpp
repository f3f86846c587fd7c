#pragma once

#include <string>
#include <vector>

#include "mops/numerics.hpp"
#include "mops/polynomial.hpp"
#include "mops/recurrence.hpp"

namespace mops {

enum class Basis { second_kind, canonical };
enum class Method { recurrence, closed_form };

std::string_view to_string(Basis b);
std::string_view to_string(Method m);
Basis parse_basis(std::string_view s);
Method parse_method(std::string_view s);

inline constexpr int kMaxTableOrder = 512;

/// Triangular table lambda_{n,m}, 0 <= m <= n <= n_max.
class CCTable {
 public:
  CCTable() = default;
  CCTable(int n_max, Basis basis, Method method);

  int n_max() const { return n_max_; }
  Basis basis() const { return basis_; }
  Method method() const { return method_; }
  /// Zero outside the triangle.
  AffineScalar at(int n, int m) const;
  void set(int n, int m, AffineScalar v);
  const std::vector<std::vector<AffineScalar>>& rows() const { return rows_; }

  CCTable instantiate(const Rational& value) const;
  /// Entry-wise equality, ignoring the method tag.
  bool same_entries(const CCTable& o) const { return n_max_ == o.n_max_ && rows_ == o.rows_; }
  /// Number of nonzero entries in row n.
  int row_support(int n) const;

  friend bool operator==(const CCTable& a, const CCTable& b) = default;

 private:
  int n_max_ = 0;
  Basis basis_ = Basis::second_kind;
  Method method_ = Method::recurrence;
  std::vector<std::vector<AffineScalar>> rows_;
};

/// General recurrence: expresses the tilde sequence in the base sequence.
CCTable cc_recurrence(const RecurrenceSpec& tilde, const RecurrenceSpec& base, int n_max);

/// Diagonal closed forms against the second-kind basis (formal parameter).
CCTable cc_closed_translation(int r, int n_max);
CCTable cc_closed_dilatation(int r, int n_max);

/// Which internal formula family fills the canonical tables.
enum class CanonicalPath { c_form, binomial, checked };

/// Closed forms against the monomial basis (formal parameter). `checked` computes both
/// paths and throws Internal on any disagreement.
CCTable cc_canonical_translation(int r, int n_max, CanonicalPath path = CanonicalPath::checked);
CCTable cc_canonical_dilatation(int r, int n_max, CanonicalPath path = CanonicalPath::checked);

/// sum_m table(n, m) * basis[m] for n = 0..n_max.
std::vector<Polynomial> reconstruct(const CCTable& table, const std::vector<Polynomial>& basis);

/// Paper-style triangular layout with symbolic entries; `name` spells the parameter.
std::string render_text(const CCTable& table, std::string_view name);
std::string render_csv(const CCTable& table, std::string_view name);

std::string_view param_name(PerturbationKind kind);

}  // namespace mops
