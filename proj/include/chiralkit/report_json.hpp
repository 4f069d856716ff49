#pragma once

#include <json.hpp>

#include "chiralkit/gamma.hpp"
#include "chiralkit/qft.hpp"
#include "chiralkit/symmetry.hpp"
#include "chiralkit/verdict.hpp"

namespace chiralkit {

/// Insertion-ordered JSON so serialized reports are stable byte-for-byte for a
/// given run configuration.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";

Json to_json(const CliffordReport& report);

/// Serializes a plane-wave check. Per-sample rows beyond per_sample_cap are
/// dropped and flagged via per_sample_truncated; totals stay intact.
Json to_json(const CheckReport& report, std::size_t per_sample_cap = 20);

Json to_json(const InfluenceClassification& classification);
Json to_json(const Verdict& verdict);

/// The full system-by-influence decision table.
Json verdict_table_json();

/// Standard output wrapper: tool version, echoed command configuration, payload.
Json envelope(std::string_view command, Json command_echo, Json result);

std::string pretty(const Json& j);

}  // namespace chiralkit
