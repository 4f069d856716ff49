#include "chiralkit/report_json.hpp"

namespace chiralkit {

Json to_json(const CliffordReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  return {{"all_passed", report.all_passed()}, {"checks", std::move(checks)}};
}

Json to_json(const CheckReport& report, std::size_t per_sample_cap) {
  Json rows = Json::array();
  const std::size_t kept = std::min(per_sample_cap, report.per_sample.size());
  for (std::size_t k = 0; k < kept; ++k) {
    const auto& r = report.per_sample[k];
    rows.push_back({{"digest", r.digest},
                    {"check", r.check},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"deviation", r.deviation},
                    {"degenerate", r.degenerate}});
  }
  return {{"case_name", report.case_name},
          {"seed", report.seed},
          {"samples", report.samples},
          {"tolerance", report.tolerance},
          {"max_abs_deviation", report.max_abs_deviation},
          {"passed", report.passed},
          {"expected_parity_sign", report.expected_parity_sign},
          {"measured_parity_sign", report.measured_parity_sign},
          {"expected_chain_sign", report.expected_chain_sign},
          {"measured_chain_sign", report.measured_chain_sign},
          {"nonzero_samples", report.nonzero_samples},
          {"degenerate_rows", report.degenerate_rows},
          {"per_sample_total", report.per_sample.size()},
          {"per_sample_truncated", report.per_sample.size() > kept},
          {"per_sample", std::move(rows)}};
}

Json to_json(const InfluenceClassification& classification) {
  Json per_term = Json::array();
  for (const auto& t : classification.per_term)
    per_term.push_back({{"parity_sign", t.parity_sign}, {"time_sign", t.time_sign}});
  return {{"class", std::string(to_string(classification.cls))},
          {"parity_sign", classification.parity_sign},
          {"time_sign", classification.time_sign},
          {"rotation_invariant", classification.rotation_invariant},
          {"per_term", std::move(per_term)},
          {"parity_even_terms", classification.parity_even_terms},
          {"parity_odd_terms", classification.parity_odd_terms}};
}

Json to_json(const Verdict& verdict) {
  Json steps = Json::array();
  for (const auto& s : verdict.derivation)
    steps.push_back({{"operation", s.operation}, {"relation", s.relation}});
  return {{"system", std::string(to_string(verdict.system))},
          {"influence", std::string(to_string(verdict.influence))},
          {"relation", verdict.relation == DiagonalRelation::AntisymmetricDiagonal
                           ? "antisymmetric_diagonal"
                           : "forced_zero"},
          {"pved_possible", verdict.pved_possible},
          {"derivation", std::move(steps)},
          {"note", verdict.note}};
}

Json verdict_table_json() {
  Json rows = Json::array();
  for (SystemKind system : {SystemKind::TrulyChiralSystem, SystemKind::FalselyChiralSystem}) {
    for (ChiralityClass influence : {ChiralityClass::TrulyChiral, ChiralityClass::FalselyChiral}) {
      const Verdict v = chirality_test(system, influence);
      rows.push_back({{"system", std::string(to_string(system))},
                      {"influence", std::string(to_string(influence))},
                      {"relation", v.relation == DiagonalRelation::AntisymmetricDiagonal
                                       ? "antisymmetric_diagonal"
                                       : "forced_zero"},
                      {"pved_possible", v.pved_possible}});
    }
  }
  return {{"rows", std::move(rows)}};
}

Json envelope(std::string_view command, Json command_echo, Json result) {
  return {{"tool_version", std::string(kToolVersion)},
          {"command", std::string(command)},
          {"config", command_echo.is_null() ? Json::object() : std::move(command_echo)},
          {"result", std::move(result)}};
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace chiralkit
