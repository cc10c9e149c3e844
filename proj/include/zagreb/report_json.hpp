#pragma once

#include <nlohmann/json.hpp>

#include "zagreb/bounds.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

// nlohmann ADL serializers. Exact integer quantities serialize as JSON
// integers, never floats; the 128-bit comparison falls back to a decimal
// string when it exceeds int64.

nlohmann::json wide_to_json(Wide value);

void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const IndexReport& r);
void to_json(nlohmann::json& j, const VariableIndexValue& v);
void to_json(nlohmann::json& j, const BoundCheck& c);
void to_json(nlohmann::json& j, const ThresholdResult& t);
void to_json(nlohmann::json& j, const ScanReport& r);
void to_json(nlohmann::json& j, const GraphClass& c);

}  // namespace zagreb
