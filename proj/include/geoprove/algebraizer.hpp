#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geoprove/polynomial.hpp"
#include "geoprove/protocol.hpp"

namespace geoprove {

class Coordinate {
 public:
  enum class Kind { Zero, FreeVar, DepVar };

  constexpr Coordinate() = default;
  static constexpr Coordinate zero() { return {}; }
  static constexpr Coordinate free(std::uint32_t i) { return Coordinate(Kind::FreeVar, i); }
  static constexpr Coordinate dep(std::uint32_t i) { return Coordinate(Kind::DepVar, i); }

  constexpr Kind kind() const { return kind_; }
  constexpr std::uint32_t index() const { return index_; }
  std::optional<Variable> variable() const;
  Polynomial poly() const;
  std::string to_string() const;

  constexpr bool operator==(const Coordinate&) const = default;

 private:
  constexpr Coordinate(Kind k, std::uint32_t i) : kind_(k), index_(i) {}
  Kind kind_ = Kind::Zero;
  std::uint32_t index_ = 0;
};

struct PointCoords {
  Coordinate x;
  Coordinate y;
  bool operator==(const PointCoords&) const = default;
};

struct CoordinateAssignment {
  std::map<Label, PointCoords> coords;
  /// Labels in declaration order.
  std::vector<Label> order;
  /// Next unused free / dependent index.
  std::uint32_t next_free = 1;
  std::uint32_t next_dep = 1;
  std::optional<PinChoice> pinned;

  const PointCoords& at(const Label& label) const { return coords.at(label); }
  std::vector<Variable> free_vars() const;
  std::vector<Variable> dep_vars() const;
  /// Labels whose coordinates mention `v`, in declaration order.
  std::vector<Label> carriers(Variable v) const;
};

struct AssignOptions {
  /// Overrides the protocol's `#@pin` directive and the heuristic.
  std::optional<PinChoice> pin;
  /// Overrides only the axis of whichever pin is used.
  std::optional<PinAxis> axis;
  /// With false, every free point gets two free variables.
  bool pin_points = true;
  std::uint32_t first_index = 1;
  /// Reuse a coordinate when a point lies on a symbolically axis-parallel line.
  bool axis_shortcuts = true;
};

/// The two free points with the highest reference counts, ties broken by
/// declaration order. With a single free point only the origin is pinned.
std::optional<PinChoice> choose_pins(const ConstructionProtocol& p);

CoordinateAssignment assign_coordinates(const ConstructionProtocol& p, const AssignOptions& options = {});

struct AlgebraicSystem {
  std::vector<Polynomial> construction_polys;
  /// Label of the step each construction polynomial came from.
  std::vector<Label> construction_sources;
  std::vector<Polynomial> statement_polys;
  /// Nonvanishing assumptions made while algebrizing, normalized.
  std::vector<Polynomial> side_ndgs;
  std::vector<Variable> free_vars;
  std::vector<Variable> dep_vars;
};

AlgebraicSystem algebrize(const ConstructionProtocol& p, const CoordinateAssignment& a);

/// Symbolic point and line forms used to build relation polynomials.
struct SymPoint {
  Polynomial x;
  Polynomial y;
};

/// A line through `through` with direction `(dx, dy)`.
struct SymLine {
  SymPoint through;
  Polynomial dx;
  Polynomial dy;
};

SymPoint symbolic_point(const Label& label, const CoordinateAssignment& a);
SymLine symbolic_line(const LineExpr& l, const CoordinateAssignment& a);

namespace relation {

Polynomial collinear(const SymPoint& a, const SymPoint& b, const SymPoint& c);
/// Cross product of the directions.
Polynomial parallel(const SymLine& l1, const SymLine& l2);
/// Dot product of the directions.
Polynomial perpendicular(const SymLine& l1, const SymLine& l2);
Polynomial incident(const SymPoint& p, const SymLine& l);
/// |p - center|^2 - |through - center|^2.
Polynomial on_circle(const SymPoint& p, const SymPoint& center, const SymPoint& through);
/// 4x4 determinant with rows (x^2 + y^2, x, y, 1) for p, a, b, c.
Polynomial concyclic(const SymPoint& p, const SymPoint& a, const SymPoint& b, const SymPoint& c);
/// |ab|^2 - |cd|^2.
Polynomial congruent(const SymPoint& a, const SymPoint& b, const SymPoint& c, const SymPoint& d);
std::vector<Polynomial> identical(const SymPoint& a, const SymPoint& b);

}  // namespace relation

/// Raw relation polynomials of a statement (no normalization).
std::vector<Polynomial> relation_polynomials(const Statement& s, const CoordinateAssignment& a);

}  // namespace geoprove
