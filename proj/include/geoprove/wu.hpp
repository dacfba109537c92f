#pragma once

#include <cstdint>
#include <vector>

#include "geoprove/algebraizer.hpp"
#include "geoprove/budget.hpp"
#include "geoprove/result.hpp"

namespace geoprove {

enum class PivotRule {
  /// Minimal degree in the main variable, then input order.
  DegreeThenInputOrder,
  /// Minimal degree, then fewest monomials, then input order.
  DegreeThenSize,
};

struct WuOptions {
  PivotRule pivot = PivotRule::DegreeThenInputOrder;
  /// Split NDGs sharing a common factor into pairwise coprime ones.
  bool coprime_refinement = true;
  /// Reduce statement polynomials on OpenMP threads.
  bool parallel = true;
};

struct Triangulation {
  TriangularSystem system;
  std::vector<NdgCondition> ndgs;
};

/// Throws InconsistentSystemError when a nonzero constant (or a relation
/// among free variables alone) is derived, TimeoutError on budget exhaustion.
Triangulation triangulate(const AlgebraicSystem& sys, const Budget& budget = {}, const WuOptions& options = {});

/// Pseudo-divides `g` through the chain from the highest entry down,
/// stripping integer content after every step.
WuCertificate final_remainder(const Polynomial& g, const TriangularSystem& t, const Budget& budget = {});

/// Statement proved iff every final remainder is zero.
ProofResult prove_wu(const AlgebraicSystem& sys, const Budget& budget = {}, const WuOptions& options = {});

/// Replays every recorded identity by expansion and checks that the chain of
/// remainders ends in `c.final_remainder`.
bool verify_certificate(const WuCertificate& c, const TriangularSystem& t);
/// Also checks that `c.statement` is one of the statement polynomials.
bool verify_certificate(const WuCertificate& c, const AlgebraicSystem& sys, const TriangularSystem& t);

/// Content-free, sign-normalized, square-free factors, constants removed,
/// deduplicated; first occurrence keeps its origin.
std::vector<NdgCondition> normalize_ndgs(const std::vector<NdgCondition>& raw, bool coprime_refinement = true);

/// Sum-of-even-powers NDGs are dropped when one of their variables is already
/// asserted nonzero, otherwise replaced by a "not all zero" reading.
std::vector<NdgCondition> real_simplify(const std::vector<NdgCondition>& ndgs);

struct SoundnessReport {
  int attempted = 0;
  /// Samples where the chain had a rational solution and every NDG held.
  int accepted = 0;
  int failures = 0;
};

/// Draws free values from random construction instances, solves the chain
/// for the dependent variables by rational roots, and checks every statement
/// polynomial vanishes exactly where all NDGs are nonzero.
SoundnessReport sample_soundness(const ConstructionProtocol& p, const CoordinateAssignment& a,
                                 const AlgebraicSystem& sys, const ProofResult& r, int samples,
                                 std::uint64_t seed);

}  // namespace geoprove
