#pragma once

#include <string>

#include <json.hpp>

#include "geoprove/prover.hpp"

namespace geoprove {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Text, Json };

/// Text report without the timing block; byte-identical across runs.
std::string render_text(const ProofRun& run);
/// The timing and size block kept apart from the deterministic body.
std::string render_stats(const ProofStats& stats);

nlohmann::json to_json(const ProofRun& run);
nlohmann::json to_json(const WuCertificate& c);
WuCertificate certificate_from_json(const nlohmann::json& j);

/// Text body followed by the stats block, or the pretty-printed JSON.
std::string emit_report(const ProofRun& run, ReportFormat format);

/// What a JSON report carries back: enough to rerun verify_certificate.
struct ParsedReport {
  int version = 0;
  std::string name;
  Method method = Method::Wu;
  std::string protocol_text;
  AlgebraicSystem system;
  ProofResult result;
};

/// Throws Error on a malformed document or an unknown schema version.
ParsedReport parse_json_report(const std::string& text);

/// Shown for goals whose algebraic form is weaker than the geometric one.
std::optional<std::string> goal_caveat(const Statement& goal);

}  // namespace geoprove
