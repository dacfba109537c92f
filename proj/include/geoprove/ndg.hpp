#pragma once

#include <optional>
#include <vector>

#include "geoprove/algebraizer.hpp"
#include "geoprove/result.hpp"

namespace geoprove {

/// Variables of `p`, ascending.
std::vector<Variable> extract_variables(const Polynomial& p);

/// Minimal sets of points whose coordinates cover `vars`, each extended by
/// subsets of neutral points: points all of whose coordinate variables lie
/// in `vars` or `known_nonzero` (origin-pinned points qualify trivially).
/// Sets have at most `max_size` points and are ordered smaller first, then
/// by declaration order.
std::vector<std::vector<Label>> candidate_point_sets(const std::vector<Variable>& vars,
                                                     const ConstructionProtocol& p, const CoordinateAssignment& a,
                                                     const std::vector<Variable>& known_nonzero = {},
                                                     std::size_t max_size = 4);

/// Polynomial whose nonvanishing the condition asserts. NotIdentical uses
/// the lone nonzero coordinate difference when the other vanishes
/// identically, otherwise the squared distance.
Polynomial condition_polynomial(const GeometricCondition& c, const CoordinateAssignment& a);

/// Whether `candidate` equals +-k * f * (product of members of `assumed`,
/// with repetition).
bool matches_ndg(const Polynomial& candidate, const Polynomial& f, const std::vector<Polynomial>& assumed);

struct MatchOptions {
  std::size_t max_set_size = 4;
  std::size_t max_candidates = 10'000;
};

/// Every matching condition in enumeration order (bounded by the cap).
std::vector<GeometricCondition> all_matches(const Polynomial& f, const ConstructionProtocol& p,
                                            const CoordinateAssignment& a,
                                            const std::vector<Polynomial>& assumed = {},
                                            const MatchOptions& options = {});

/// Number of free or semi-free points among the condition's points.
int free_point_count(const GeometricCondition& c, const ConstructionProtocol& p);

/// Prefers matches equal to +-k * f outright over those needing a cofactor,
/// then the most free or semi-free points, then the earliest.
std::optional<GeometricCondition> match_ndg(const Polynomial& f, const ConstructionProtocol& p,
                                            const CoordinateAssignment& a,
                                            const std::vector<Polynomial>& assumed = {},
                                            const MatchOptions& options = {});

/// Fills `geometric` where a reading is found; order and polynomials are
/// untouched. Every NDG in the list is assumed when matching the others.
std::vector<NdgCondition> interpret_all(const std::vector<NdgCondition>& ndgs, const ConstructionProtocol& p,
                                        const CoordinateAssignment& a, const MatchOptions& options = {});

}  // namespace geoprove
