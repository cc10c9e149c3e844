#include "zagreb/report_json.hpp"

#include <limits>

namespace zagreb {

nlohmann::json wide_to_json(Wide value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return static_cast<long long>(value);
  return wide_to_string(value);
}

void to_json(nlohmann::json& j, const Rational& r) {
  j = nlohmann::json{{"num", r.num}, {"den", r.den}};
}

void to_json(nlohmann::json& j, const IndexReport& r) {
  j = nlohmann::json{{"n", r.n},   {"m", r.m},
                     {"m1", r.m1}, {"m2", r.m2},
                     {"comparison", wide_to_json(r.comparison)},
                     {"verdict", verdict_name(r.verdict)}};
}

void to_json(nlohmann::json& j, const VariableIndexValue& v) {
  j = nlohmann::json{{"lambda", v.lambda}, {"value", v.value}};
}

void to_json(nlohmann::json& j, const BoundCheck& c) {
  j = nlohmann::json{{"name", c.name},
                     {"relation", c.relation == Relation::greater_equal ? ">=" : "<="},
                     {"exact", c.exact()},
                     {"satisfied", c.satisfied},
                     {"tight", c.tight},
                     {"equality_condition_met", c.equality_condition_met}};
  if (c.exact()) {
    j["lhs"] = std::get<Rational>(c.lhs);
    j["rhs"] = std::get<Rational>(c.rhs);
  } else {
    j["lhs"] = std::get<double>(c.lhs);
    j["rhs"] = std::get<double>(c.rhs);
  }
}

void to_json(nlohmann::json& j, const ThresholdResult& t) {
  j = nlohmann::json{{"b", t.b}, {"discriminant", t.discriminant}, {"a_min", t.a_min}};
}

void to_json(nlohmann::json& j, const ScanReport& r) {
  j = nlohmann::json{
      {"total_scanned", r.total_scanned},
      {"skipped_edgeless", r.skipped_edgeless},
      {"class_counts", r.class_counts},
      {"verdicts",
       {{"holds_strict", r.holds_strict},
        {"holds_with_equality", r.holds_with_equality},
        {"fails", r.fails}}},
      {"failures", r.failing_total},
      {"equalities", r.equality_total},
      {"failing_chemical_connected", r.failing_chemical_connected},
      {"failing", r.failing},
      {"equality", r.equality},
      {"bound_violations", r.bound_violations},
      {"tightness_mismatches", r.tightness_mismatches},
  };
}

void to_json(nlohmann::json& j, const GraphClass& c) {
  j = nlohmann::json{{"connected", c.connected},
                     {"components", c.components},
                     {"cycle_rank", c.cycle_rank},
                     {"max_degree", c.max_degree},
                     {"min_degree", c.min_degree},
                     {"is_tree", c.is_tree},
                     {"is_unicyclic", c.is_unicyclic},
                     {"is_chemical", c.is_chemical},
                     {"is_regular", c.is_regular},
                     {"is_star", c.is_star},
                     {"is_cycle", c.is_cycle},
                     {"is_complete", c.is_complete}};
}

}  // namespace zagreb
