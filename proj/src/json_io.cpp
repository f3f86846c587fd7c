#include "mops/json_io.hpp"

namespace mops {

void to_json(json& j, const Rational& v) { j = v.str(); }
void from_json(const json& j, Rational& v) { v = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const AffineScalar& v) { j = json{{"const", v.constant()}, {"lin", v.linear()}}; }
void from_json(const json& j, AffineScalar& v) {
  v = AffineScalar(j.at("const").get<Rational>(), j.at("lin").get<Rational>());
}

void to_json(json& j, const QuadExt& v) { j = json{{"a", v.a()}, {"b", v.b()}, {"rad", v.radicand()}}; }
void from_json(const json& j, QuadExt& v) {
  v = QuadExt(j.at("a").get<Rational>(), j.at("b").get<Rational>(), j.at("rad").get<Rational>());
}

void to_json(json& j, const Polynomial& v) { j = json{{"degree", v.degree()}, {"coeffs", v.coeffs()}}; }
void from_json(const json& j, Polynomial& v) {
  v = Polynomial(j.at("coeffs").get<std::vector<AffineScalar>>());
  if (v.degree() != j.at("degree").get<int>()) throw Error(ErrorKind::Parse, "polynomial degree mismatch");
}

void to_json(json& j, const CosPoint& v) { j = json{{"k", v.k()}, {"m", v.m()}}; }
void from_json(const json& j, CosPoint& v) { v = CosPoint(j.at("k").get<long>(), j.at("m").get<long>()); }

void to_json(json& j, const CCTable& v) {
  j = json{{"n_max", v.n_max()},
           {"basis", std::string(to_string(v.basis()))},
           {"method", std::string(to_string(v.method()))},
           {"rows", v.rows()}};
}
void from_json(const json& j, CCTable& v) {
  CCTable t(j.at("n_max").get<int>(), parse_basis(j.at("basis").get<std::string>()),
            parse_method(j.at("method").get<std::string>()));
  const auto rows = j.at("rows").get<std::vector<std::vector<AffineScalar>>>();
  if (static_cast<int>(rows.size()) != t.n_max() + 1) throw Error(ErrorKind::Parse, "CC table row count");
  for (int n = 0; n <= t.n_max(); ++n) {
    const auto& row = rows[static_cast<size_t>(n)];
    if (static_cast<int>(row.size()) != n + 1) throw Error(ErrorKind::Parse, "CC table row length");
    for (int m = 0; m <= n; ++m) t.set(n, m, row[static_cast<size_t>(m)]);
  }
  v = std::move(t);
}

void to_json(json& j, const QInterval& v) { j = json{{"lo", v.lo}, {"hi", v.hi}}; }
void from_json(const json& j, QInterval& v) {
  v.lo = j.at("lo").get<QuadExt>();
  v.hi = j.at("hi").get<QuadExt>();
}

void to_json(json& j, const GershgorinRegion& v) { j = v.intervals; }
void from_json(const json& j, GershgorinRegion& v) { v.intervals = j.get<std::vector<QInterval>>(); }

void to_json(json& j, const ZeroReport& v) {
  json real = json::array();
  for (const auto& r : v.real) real.push_back({{"lo", r.iv.lo}, {"hi", r.iv.hi}, {"approx", r.approx}});
  json cpx = json::array();
  for (const auto& c : v.complex_pairs) cpx.push_back({c.real(), c.imag()});
  j = json{{"real", real}, {"complex", cpx}, {"n_real", v.n_real}, {"n_complex_pairs", v.n_complex_pairs}};
}
void from_json(const json& j, ZeroReport& v) {
  v = ZeroReport{};
  for (const auto& r : j.at("real")) {
    v.real.push_back({{r.at("lo").get<Rational>(), r.at("hi").get<Rational>()}, r.at("approx").get<double>()});
  }
  for (const auto& c : j.at("complex")) v.complex_pairs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  v.n_real = j.at("n_real").get<int>();
  v.n_complex_pairs = j.at("n_complex_pairs").get<int>();
}

void to_json(json& j, const OriginReport& v) {
  j = json{{"value_at_0", v.value_at_0},
           {"sum_of_zeros", v.sum_of_zeros},
           {"product_of_zeros", v.product_of_zeros},
           {"origin_is_zero", v.origin_is_zero}};
}
void from_json(const json& j, OriginReport& v) {
  v.value_at_0 = j.at("value_at_0").get<Rational>();
  v.sum_of_zeros = j.at("sum_of_zeros").get<Rational>();
  v.product_of_zeros = j.at("product_of_zeros").get<Rational>();
  v.origin_is_zero = j.at("origin_is_zero").get<bool>();
}

void to_json(json& j, const ExtremalReport& v) {
  j = json{{"sign_at_greatest", v.sign_at_greatest},
           {"sign_at_smallest", v.sign_at_smallest},
           {"n_above", v.n_above},
           {"n_below", v.n_below}};
}
void from_json(const json& j, ExtremalReport& v) {
  v.sign_at_greatest = j.at("sign_at_greatest").get<int>();
  v.sign_at_smallest = j.at("sign_at_smallest").get<int>();
  v.n_above = j.at("n_above").get<int>();
  v.n_below = j.at("n_below").get<int>();
}

void to_json(json& j, const CoincidencePredicates& v) {
  j = json{{"double_common", v.double_common},
           {"divides", v.divides},
           {"double_interception", v.double_interception},
           {"common", v.common},
           {"never_both", v.never_both},
           {"all_factor_zeros_double", v.all_factor_zeros_double},
           {"all_factor_zeros_common", v.all_factor_zeros_common}};
}
void from_json(const json& j, CoincidencePredicates& v) {
  v.double_common = j.at("double_common").get<bool>();
  v.divides = j.at("divides").get<bool>();
  v.double_interception = j.at("double_interception").get<bool>();
  v.common = j.at("common").get<bool>();
  v.never_both = j.at("never_both").get<bool>();
  v.all_factor_zeros_double = j.at("all_factor_zeros_double").get<bool>();
  v.all_factor_zeros_common = j.at("all_factor_zeros_common").get<bool>();
}

void to_json(json& j, const IntersectionReport& v) {
  json pts = json::array();
  for (const auto& p : v.points) {
    pts.push_back({{"k", p.x.k()},
                   {"m", p.x.m()},
                   {"x_approx", p.x.approx()},
                   {"double", p.is_double},
                   {"common", p.common},
                   {"double_common", p.double_common}});
  }
  j = json{{"kind", std::string(to_string(v.kind))},
           {"r", v.r},
           {"n", v.n},
           {"points", pts},
           {"n_distinct", v.n_distinct},
           {"origin", std::string(to_string(v.origin))},
           {"origin_common", std::string(to_string(v.origin_common))},
           {"predicates", v.predicates}};
}
void from_json(const json& j, IntersectionReport& v) {
  v = IntersectionReport{};
  v.kind = parse_perturbation_kind(j.at("kind").get<std::string>());
  v.r = j.at("r").get<int>();
  v.n = j.at("n").get<int>();
  for (const auto& p : j.at("points")) {
    InterceptionPoint pt;
    pt.x = CosPoint(p.at("k").get<long>(), p.at("m").get<long>());
    pt.is_double = p.at("double").get<bool>();
    pt.common = p.at("common").get<bool>();
    pt.double_common = p.at("double_common").get<bool>();
    v.points.push_back(pt);
  }
  v.n_distinct = j.at("n_distinct").get<int>();
  v.origin = parse_interception_class(j.at("origin").get<std::string>());
  v.origin_common = parse_common_zero_class(j.at("origin_common").get<std::string>());
  v.predicates = j.at("predicates").get<CoincidencePredicates>();
}

}  // namespace mops
