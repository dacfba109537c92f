#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "geoprove/algebraizer.hpp"
#include "geoprove/groebner.hpp"
#include "geoprove/result.hpp"
#include "geoprove/wu.hpp"

namespace geoprove {

struct ProveOptions {
  Method method = Method::Wu;
  AssignOptions assign;
  /// Groebner only.
  NdgMode ndg_mode = NdgMode::Wu;
  MonomialOrder order = MonomialOrder::degrevlex();
  WuOptions wu;
  /// Zero or negative means no limit.
  double timeout_seconds = 0;
  bool interpret_ndgs = true;
  /// Replay every Wu certificate after a proof.
  bool verify_certificates = false;
};

/// Everything produced for one protocol, in pipeline order.
struct ProofRun {
  ConstructionProtocol protocol;
  CoordinateAssignment assignment;
  AlgebraicSystem system;
  ProofResult result;
  std::vector<Warning> warnings;
  /// Set when certificates were replayed.
  std::optional<bool> certificates_verified;
};

/// Algebrizes and proves. Budget exhaustion yields Verdict::Timeout and an
/// unsatisfiable construction Verdict::Inconsistent; neither throws.
ProofRun prove(const ConstructionProtocol& p, const ProveOptions& options = {});

/// Reads and parses `path` first. Throws Error (ProtocolError on bad input).
ProofRun prove_file(const std::filesystem::path& path, const ProveOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace geoprove
