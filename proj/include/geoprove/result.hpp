#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoprove/polynomial.hpp"
#include "geoprove/protocol.hpp"

namespace geoprove {

struct ChainEntry {
  Variable main_var;
  Polynomial poly;
  Polynomial initial;

  bool operator==(const ChainEntry&) const = default;
};

/// Entries ordered by strictly increasing main variable.
struct TriangularSystem {
  std::vector<ChainEntry> chain;

  /// Checks the shape invariants; on failure `why` (if given) says which.
  bool well_formed(std::string* why = nullptr) const;
  std::size_t size() const { return chain.size(); }
  bool operator==(const TriangularSystem&) const = default;
};

/// One recorded pseudo-division c^e * p = t * q + content * r, where p is
/// the statement polynomial (step 0) or the previous step's r.
struct CertificateStep {
  std::size_t dividend_id = 0;
  std::size_t chain_index = 0;
  Polynomial quotient;
  Polynomial remainder;
  Polynomial initial;
  unsigned exponent = 0;
  Integer content{1};

  bool operator==(const CertificateStep&) const = default;
};

struct WuCertificate {
  Polynomial statement;
  std::vector<CertificateStep> steps;
  Polynomial final_remainder;

  bool operator==(const WuCertificate&) const = default;
};

struct GeometricCondition {
  enum class Kind { NotIdentical, NotCollinear, NotPerpendicular, NotOnCircle, NotParallel };

  Kind kind = Kind::NotIdentical;
  /// NotIdentical {A, B}; NotCollinear {A, B, C}; NotPerpendicular and
  /// NotParallel {A, B, C, D} for lines AB and CD; NotOnCircle {P, O, A}.
  std::vector<Label> points;

  std::string to_string() const;
  bool operator==(const GeometricCondition&) const = default;
};

std::string_view condition_kind_name(GeometricCondition::Kind k);

enum class NdgOrigin { TriangulationInitial, AlgebraizationSide };

struct NdgCondition {
  /// Asserted nonzero; content-free with positive leading coefficient.
  Polynomial poly;
  NdgOrigin origin = NdgOrigin::TriangulationInitial;
  /// Chain index for TriangulationInitial, otherwise -1.
  int chain_index = -1;
  std::optional<GeometricCondition> geometric;
  /// Set for conditions rewritten under the real interpretation.
  std::optional<std::string> real_reading;

  bool operator==(const NdgCondition&) const = default;
};

enum class Verdict { Proved, NotProved, Timeout, Inconsistent };
enum class Method { Wu, Groebner };

std::string_view verdict_name(Verdict v);
std::string_view method_name(Method m);

struct ProofStats {
  double algebrize_seconds = 0;
  double triangulate_seconds = 0;
  double remainder_seconds = 0;
  double groebner_seconds = 0;
  double total_seconds = 0;
  std::size_t peak_monomials = 0;
  std::uint32_t max_degree = 0;
};

struct ProofResult {
  Method method = Method::Wu;
  Verdict verdict = Verdict::NotProved;
  /// First nonzero final remainder (Wu) or normal form (Groebner).
  std::optional<Polynomial> witness;
  std::vector<NdgCondition> ndgs;
  /// `ndgs` after the real sum-of-squares simplification.
  std::vector<NdgCondition> real_ndgs;
  std::optional<TriangularSystem> chain;
  /// One per statement polynomial, Wu only.
  std::vector<WuCertificate> certificates;
  /// Diagnostic for Timeout / Inconsistent.
  std::string message;
  ProofStats stats;
};

}  // namespace geoprove
