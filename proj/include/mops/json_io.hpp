#pragma once

#include <json.hpp>

#include "mops/connection.hpp"
#include "mops/intersections.hpp"
#include "mops/zeros.hpp"

namespace mops {

using nlohmann::json;

void to_json(json& j, const Rational& v);
void from_json(const json& j, Rational& v);
void to_json(json& j, const AffineScalar& v);
void from_json(const json& j, AffineScalar& v);
void to_json(json& j, const QuadExt& v);
void from_json(const json& j, QuadExt& v);
void to_json(json& j, const Polynomial& v);
void from_json(const json& j, Polynomial& v);
void to_json(json& j, const CosPoint& v);
void from_json(const json& j, CosPoint& v);
void to_json(json& j, const CCTable& v);
void from_json(const json& j, CCTable& v);
void to_json(json& j, const QInterval& v);
void from_json(const json& j, QInterval& v);
void to_json(json& j, const GershgorinRegion& v);
void from_json(const json& j, GershgorinRegion& v);
void to_json(json& j, const ZeroReport& v);
void from_json(const json& j, ZeroReport& v);
void to_json(json& j, const OriginReport& v);
void from_json(const json& j, OriginReport& v);
void to_json(json& j, const ExtremalReport& v);
void from_json(const json& j, ExtremalReport& v);
void to_json(json& j, const CoincidencePredicates& v);
void from_json(const json& j, CoincidencePredicates& v);
void to_json(json& j, const IntersectionReport& v);
void from_json(const json& j, IntersectionReport& v);

}  // namespace mops
