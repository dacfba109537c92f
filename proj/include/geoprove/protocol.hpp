#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geoprove {

using Label = std::string;

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct LineExpr {
  enum class Kind { Through, Perp, Parallel };

  Kind kind = Kind::Through;
  /// Through: the two points. Perp/Parallel: the point the line passes through.
  std::vector<Label> points;
  /// Perp/Parallel: the reference line.
  std::shared_ptr<const LineExpr> base;

  static LineExpr through(Label a, Label b);
  static LineExpr perp(Label p, LineExpr base);
  static LineExpr parallel(Label p, LineExpr base);

  bool operator==(const LineExpr& o) const;
};

struct CircleExpr {
  enum class Kind { CenterThrough, ThroughThree };

  Kind kind = Kind::CenterThrough;
  /// CenterThrough: {center, through}. ThroughThree: three points on it.
  std::vector<Label> points;

  bool operator==(const CircleExpr& o) const = default;
};

enum class StepKind {
  FreePoint,
  Midpoint,
  IntersectLines,
  FootOfPerpendicular,
  PointOnLine,
  PointOnCircle,
  SecondIntersectLineCircle,
};

/// Payload by kind:
///   Midpoint                  points {A, B}
///   IntersectLines            lines {l1, l2}
///   FootOfPerpendicular       points {P}, lines {l}
///   PointOnLine               lines {l}
///   PointOnCircle             circle
///   SecondIntersectLineCircle lines {l}, circle, points {K} (the known common point)
struct ConstructionStep {
  Label label;
  StepKind kind = StepKind::FreePoint;
  std::vector<Label> points;
  std::vector<LineExpr> lines;
  std::optional<CircleExpr> circle;
  SourcePos pos;

  bool is_free() const { return kind == StepKind::FreePoint; }
  bool is_semi_free() const { return kind == StepKind::PointOnLine || kind == StepKind::PointOnCircle; }

  bool operator==(const ConstructionStep& o) const;
};

enum class StatementKind {
  Collinear,
  Parallel,
  Perpendicular,
  Incident,
  IncidentCircle,
  CongruentSegments,
  Identical,
};

/// Payload by kind:
///   Collinear          points {A, B, C}
///   Parallel           lines {l1, l2}
///   Perpendicular      lines {l1, l2}
///   Incident           points {P}, lines {l}
///   IncidentCircle     points {P}, circle
///   CongruentSegments  points {A, B, C, D}   (|AB| = |CD|)
///   Identical          points {A, B}
struct Statement {
  StatementKind kind = StatementKind::Identical;
  std::vector<Label> points;
  std::vector<LineExpr> lines;
  std::optional<CircleExpr> circle;
  SourcePos pos;

  bool operator==(const Statement& o) const;
};

enum class PinAxis { X, Y };

/// Which two free points are placed at (0,0) and on an axis.
struct PinChoice {
  Label origin;
  Label second;
  PinAxis axis = PinAxis::X;

  bool operator==(const PinChoice&) const = default;
};

struct ConstructionProtocol {
  std::string name;
  std::vector<ConstructionStep> steps;
  Statement goal;
  /// From a `#@pin` directive in the source, if any.
  std::optional<PinChoice> pin;

  const ConstructionStep* find(std::string_view label) const;
  /// Index of the declaring step, or -1.
  int index_of(std::string_view label) const;

  bool operator==(const ConstructionProtocol& o) const;
};

/// Parses the line-oriented protocol language. `#` lines are comments;
/// `#@name <text>` and `#@pin <A> <B> [x|y]` are directives.
/// Throws ProtocolError.
ConstructionProtocol parse_protocol(std::string_view text);

/// Canonical source text; reparses to an equal protocol.
std::string to_text(const ConstructionProtocol& p);
std::string to_text(const LineExpr& l);
std::string to_text(const CircleExpr& c);
std::string to_text(const Statement& s);
std::string to_text(const ConstructionStep& s);

struct Warning {
  enum class Kind { UnusedPoint };
  Kind kind;
  Label label;

  bool operator==(const Warning&) const = default;
  std::string message() const;
};

std::vector<Warning> validate(const ConstructionProtocol& p);

/// Every label referenced by a line expression, recursively, in order.
void collect_labels(const LineExpr& l, std::vector<Label>& out);
/// Every label referenced by a step's construction (not its own label).
std::vector<Label> referenced_labels(const ConstructionStep& s);
std::vector<Label> referenced_labels(const Statement& s);

/// How often each declared label is referenced by later steps and the goal.
std::map<Label, int> reference_counts(const ConstructionProtocol& p);

std::string_view step_kind_name(StepKind k);
std::string_view statement_kind_name(StatementKind k);

}  // namespace geoprove
