#include "geoprove/algebraizer.hpp"

#include <algorithm>
#include <array>

#include "geoprove/division.hpp"
#include "geoprove/errors.hpp"

namespace geoprove {

// ------------------------------------------------------------ Coordinate

std::optional<Variable> Coordinate::variable() const {
  switch (kind_) {
    case Kind::Zero: return std::nullopt;
    case Kind::FreeVar: return Variable::free(index_);
    case Kind::DepVar: return Variable::dependent(index_);
  }
  return std::nullopt;
}

Polynomial Coordinate::poly() const {
  auto v = variable();
  return v ? Polynomial::variable(*v) : Polynomial{};
}

std::string Coordinate::to_string() const {
  auto v = variable();
  return v ? v->name() : "0";
}

std::vector<Variable> CoordinateAssignment::free_vars() const {
  std::vector<Variable> out;
  for (const auto& [label, pc] : coords) {
    for (Coordinate c : {pc.x, pc.y}) {
      if (c.kind() == Coordinate::Kind::FreeVar) out.push_back(*c.variable());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Variable> CoordinateAssignment::dep_vars() const {
  std::vector<Variable> out;
  for (const auto& [label, pc] : coords) {
    for (Coordinate c : {pc.x, pc.y}) {
      if (c.kind() == Coordinate::Kind::DepVar) out.push_back(*c.variable());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Label> CoordinateAssignment::carriers(Variable v) const {
  std::vector<Label> out;
  for (const Label& l : order) {
    const PointCoords& pc = coords.at(l);
    if (pc.x.variable() == v || pc.y.variable() == v) out.push_back(l);
  }
  return out;
}

// ---------------------------------------------------------- assignment

std::optional<PinChoice> choose_pins(const ConstructionProtocol& p) {
  const auto counts = reference_counts(p);
  std::vector<const ConstructionStep*> free_points;
  for (const auto& s : p.steps) {
    if (s.is_free()) free_points.push_back(&s);
  }
  if (free_points.empty()) return std::nullopt;
  // stable_sort keeps declaration order among equal counts.
  std::stable_sort(free_points.begin(), free_points.end(), [&](const auto* a, const auto* b) {
    return counts.at(a->label) > counts.at(b->label);
  });
  PinChoice pin;
  pin.origin = free_points[0]->label;
  if (free_points.size() > 1) pin.second = free_points[1]->label;
  // The point declared first goes to the origin.
  if (!pin.second.empty() && p.index_of(pin.second) < p.index_of(pin.origin)) std::swap(pin.origin, pin.second);
  return pin;
}

namespace {

struct AxisInfo {
  std::optional<Coordinate> vertical;    // x == c on the whole line
  std::optional<Coordinate> horizontal;  // y == c on the whole line
};

AxisInfo axis_of(const LineExpr& l, const CoordinateAssignment& a) {
  AxisInfo out;
  switch (l.kind) {
    case LineExpr::Kind::Through: {
      const PointCoords& p = a.at(l.points[0]);
      const PointCoords& q = a.at(l.points[1]);
      if (p.x == q.x && p.y != q.y) out.vertical = p.x;
      if (p.y == q.y && p.x != q.x) out.horizontal = p.y;
      break;
    }
    case LineExpr::Kind::Perp: {
      const AxisInfo base = axis_of(*l.base, a);
      const PointCoords& p = a.at(l.points[0]);
      if (base.vertical) out.horizontal = p.y;
      if (base.horizontal) out.vertical = p.x;
      break;
    }
    case LineExpr::Kind::Parallel: {
      const AxisInfo base = axis_of(*l.base, a);
      const PointCoords& p = a.at(l.points[0]);
      if (base.vertical) out.vertical = p.x;
      if (base.horizontal) out.horizontal = p.y;
      break;
    }
  }
  return out;
}

class Assigner {
 public:
  Assigner(const ConstructionProtocol& p, const AssignOptions& o) : proto_(p), opts_(o) {
    out_.next_free = o.first_index;
    out_.next_dep = o.first_index;
  }

  CoordinateAssignment run() {
    std::optional<PinChoice> pin;
    if (opts_.pin_points) pin = opts_.pin ? opts_.pin : proto_.pin ? proto_.pin : choose_pins(proto_);
    if (pin && opts_.axis) pin->axis = *opts_.axis;
    if (pin) place_pins(*pin);

    for (const auto& s : proto_.steps) {
      out_.order.push_back(s.label);
      if (out_.coords.count(s.label)) continue;
      out_.coords[s.label] = assign(s);
    }
    return std::move(out_);
  }

 private:
  void place_pins(const PinChoice& pin) {
    for (const Label* l : {&pin.origin, &pin.second}) {
      if (l->empty()) continue;
      const ConstructionStep* s = proto_.find(*l);
      if (!s || !s->is_free()) throw Error("cannot pin '" + *l + "': not a free point");
    }
    out_.coords[pin.origin] = {Coordinate::zero(), Coordinate::zero()};
    if (!pin.second.empty()) {
      const Coordinate u = fresh_free();
      out_.coords[pin.second] = pin.axis == PinAxis::X ? PointCoords{u, Coordinate::zero()}
                                                       : PointCoords{Coordinate::zero(), u};
    }
    out_.pinned = pin;
  }

  Coordinate fresh_free() { return Coordinate::free(out_.next_free++); }
  Coordinate fresh_dep() { return Coordinate::dep(out_.next_dep++); }

  AxisInfo axis(const LineExpr& l) const {
    return opts_.axis_shortcuts ? axis_of(l, out_) : AxisInfo{};
  }

  PointCoords assign(const ConstructionStep& s) {
    switch (s.kind) {
      case StepKind::FreePoint: {
        const Coordinate x = fresh_free();
        return {x, fresh_free()};
      }
      case StepKind::Midpoint: {
        const PointCoords& a = out_.at(s.points[0]);
        const PointCoords& b = out_.at(s.points[1]);
        const bool share_x = opts_.axis_shortcuts && a.x == b.x;
        const bool share_y = opts_.axis_shortcuts && a.y == b.y;
        const Coordinate x = share_x ? a.x : fresh_dep();
        return {x, share_y ? a.y : fresh_dep()};
      }
      case StepKind::IntersectLines: {
        const AxisInfo l1 = axis(s.lines[0]);
        const AxisInfo l2 = axis(s.lines[1]);
        const auto vx = l1.vertical ? l1.vertical : l2.vertical;
        const auto hy = l1.horizontal ? l1.horizontal : l2.horizontal;
        const Coordinate x = vx ? *vx : fresh_dep();
        return {x, hy ? *hy : fresh_dep()};
      }
      case StepKind::FootOfPerpendicular: {
        const AxisInfo l = axis(s.lines[0]);
        const PointCoords& p = out_.at(s.points[0]);
        if (l.vertical) return {*l.vertical, p.y};
        if (l.horizontal) return {p.x, *l.horizontal};
        const Coordinate x = fresh_dep();
        return {x, fresh_dep()};
      }
      case StepKind::PointOnLine: {
        const AxisInfo l = axis(s.lines[0]);
        if (l.vertical) return {*l.vertical, fresh_free()};
        if (l.horizontal) {
          const Coordinate x = fresh_free();
          return {x, *l.horizontal};
        }
        // The dependent coordinate is y unless the line's y-coefficient
        // (-dx) vanishes identically.
        const SymLine line = symbolic_line(s.lines[0], out_);
        if (!line.dx.is_zero()) {
          const Coordinate x = fresh_free();
          return {x, fresh_dep()};
        }
        const Coordinate x = fresh_dep();
        return {x, fresh_free()};
      }
      case StepKind::PointOnCircle: {
        const Coordinate x = fresh_free();
        return {x, fresh_dep()};
      }
      case StepKind::SecondIntersectLineCircle: {
        const AxisInfo l = axis(s.lines[0]);
        const Coordinate x = l.vertical ? *l.vertical : fresh_dep();
        return {x, l.horizontal ? *l.horizontal : fresh_dep()};
      }
    }
    throw UnsupportedStepError(std::string(step_kind_name(s.kind)));
  }

  const ConstructionProtocol& proto_;
  const AssignOptions& opts_;
  CoordinateAssignment out_;
};

}  // namespace

CoordinateAssignment assign_coordinates(const ConstructionProtocol& p, const AssignOptions& options) {
  return Assigner(p, options).run();
}

// ------------------------------------------------------ symbolic forms

SymPoint symbolic_point(const Label& label, const CoordinateAssignment& a) {
  const PointCoords& pc = a.at(label);
  return {pc.x.poly(), pc.y.poly()};
}

SymLine symbolic_line(const LineExpr& l, const CoordinateAssignment& a) {
  switch (l.kind) {
    case LineExpr::Kind::Through: {
      SymPoint p = symbolic_point(l.points[0], a);
      SymPoint q = symbolic_point(l.points[1], a);
      Polynomial dx = q.x - p.x;
      Polynomial dy = q.y - p.y;
      return {std::move(p), std::move(dx), std::move(dy)};
    }
    case LineExpr::Kind::Perp: {
      SymLine base = symbolic_line(*l.base, a);
      return {symbolic_point(l.points[0], a), -base.dy, base.dx};
    }
    case LineExpr::Kind::Parallel: {
      SymLine base = symbolic_line(*l.base, a);
      return {symbolic_point(l.points[0], a), base.dx, base.dy};
    }
  }
  return {};
}

namespace relation {

namespace {

Polynomial sq(const Polynomial& p) { return p * p; }

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Polynomial collinear(const SymPoint& a, const SymPoint& b, const SymPoint& c) {
  return (a.x - b.x) * (b.y - c.y) - (a.y - b.y) * (b.x - c.x);
}

Polynomial parallel(const SymLine& l1, const SymLine& l2) { return l1.dx * l2.dy - l1.dy * l2.dx; }

Polynomial perpendicular(const SymLine& l1, const SymLine& l2) { return l1.dx * l2.dx + l1.dy * l2.dy; }

Polynomial incident(const SymPoint& p, const SymLine& l) {
  return (p.x - l.through.x) * l.dy - (p.y - l.through.y) * l.dx;
}

Polynomial on_circle(const SymPoint& p, const SymPoint& center, const SymPoint& through) {
  return sq(p.x - center.x) + sq(p.y - center.y) - sq(through.x - center.x) - sq(through.y - center.y);
}

Polynomial concyclic(const SymPoint& p, const SymPoint& a, const SymPoint& b, const SymPoint& c) {
  const std::array<const SymPoint*, 4> rows{&p, &a, &b, &c};
  // Expand along the constant column.
  Polynomial det;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<std::array<Polynomial, 3>, 3> minor;
    int r = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == skip) continue;
      minor[r][0] = sq(rows[i]->x) + sq(rows[i]->y);
      minor[r][1] = rows[i]->x;
      minor[r][2] = rows[i]->y;
      ++r;
    }
    // Cofactor sign of entry (skip, 3).
    if ((skip + 3) % 2 == 0) det += det3(minor); else det -= det3(minor);
  }
  return det;
}

Polynomial congruent(const SymPoint& a, const SymPoint& b, const SymPoint& c, const SymPoint& d) {
  return sq(a.x - b.x) + sq(a.y - b.y) - sq(c.x - d.x) - sq(c.y - d.y);
}

std::vector<Polynomial> identical(const SymPoint& a, const SymPoint& b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace relation

namespace {

Polynomial circle_polynomial(const SymPoint& p, const CircleExpr& c, const CoordinateAssignment& a) {
  if (c.kind == CircleExpr::Kind::CenterThrough) {
    return relation::on_circle(p, symbolic_point(c.points[0], a), symbolic_point(c.points[1], a));
  }
  return relation::concyclic(p, symbolic_point(c.points[0], a), symbolic_point(c.points[1], a),
                             symbolic_point(c.points[2], a));
}

// Centre of a circle as numerators over a common denominator.
struct SymCenter {
  SymPoint num;
  Polynomial den;
};

SymCenter circle_center(const CircleExpr& c, const CoordinateAssignment& a) {
  if (c.kind == CircleExpr::Kind::CenterThrough) return {symbolic_point(c.points[0], a), Polynomial(1)};
  const SymPoint p = symbolic_point(c.points[0], a);
  const SymPoint q = symbolic_point(c.points[1], a);
  const SymPoint r = symbolic_point(c.points[2], a);
  const Polynomial np = p.x * p.x + p.y * p.y;
  const Polynomial nq = q.x * q.x + q.y * q.y;
  const Polynomial nr = r.x * r.x + r.y * r.y;
  Polynomial den = Polynomial(2) * (p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y));
  SymPoint num{np * (q.y - r.y) + nq * (r.y - p.y) + nr * (p.y - q.y),
               np * (r.x - q.x) + nq * (p.x - r.x) + nr * (q.x - p.x)};
  return {std::move(num), std::move(den)};
}

}  // namespace

std::vector<Polynomial> relation_polynomials(const Statement& s, const CoordinateAssignment& a) {
  auto pt = [&](std::size_t i) { return symbolic_point(s.points[i], a); };
  auto ln = [&](std::size_t i) { return symbolic_line(s.lines[i], a); };
  switch (s.kind) {
    case StatementKind::Collinear: return {relation::collinear(pt(0), pt(1), pt(2))};
    case StatementKind::Parallel: return {relation::parallel(ln(0), ln(1))};
    case StatementKind::Perpendicular: return {relation::perpendicular(ln(0), ln(1))};
    case StatementKind::Incident: return {relation::incident(pt(0), ln(0))};
    case StatementKind::IncidentCircle: return {circle_polynomial(pt(0), *s.circle, a)};
    case StatementKind::CongruentSegments: return {relation::congruent(pt(0), pt(1), pt(2), pt(3))};
    case StatementKind::Identical: return relation::identical(pt(0), pt(1));
  }
  return {};
}

// ---------------------------------------------------------- algebrize

namespace {

// Splits off the monomial factor made of free variables.
std::pair<Polynomial, Term> strip_free_monomial(const Polynomial& p) {
  Term common = monomial_content(p);
  Term::Storage keep;
  for (const Power& pw : common.powers()) {
    if (pw.var.cls() == VarClass::Free) keep.push_back(pw);
  }
  Term factor(std::move(keep));
  if (factor.is_constant()) return {p, factor};
  std::vector<Polynomial::Monomial> out;
  out.reserve(p.size());
  for (const auto& m : p.monomials()) out.push_back({m.term.quotient(factor), m.coeff});
  return {Polynomial::from_monomials(std::move(out)), factor};
}

class Algebrizer {
 public:
  Algebrizer(const ConstructionProtocol& p, const CoordinateAssignment& a) : proto_(p), a_(a) {}

  AlgebraicSystem run() {
    sys_.free_vars = a_.free_vars();
    sys_.dep_vars = a_.dep_vars();
    for (const auto& s : proto_.steps) step(s);
    for (const Polynomial& g : relation_polynomials(proto_.goal, a_)) {
      sys_.statement_polys.push_back(strip_free_monomial(g).first.normalized());
    }
    return std::move(sys_);
  }

 private:
  void emit(const Polynomial& f, const Label& source) {
    if (f.is_zero()) return;
    auto [core, factor] = strip_free_monomial(f);
    for (const Power& pw : factor.powers()) side(Polynomial::variable(pw.var));
    sys_.construction_polys.push_back(core.normalized());
    sys_.construction_sources.push_back(source);
  }

  void side(const Polynomial& ndg) {
    Polynomial n = ndg.normalized();
    if (n.is_constant()) return;
    if (std::find(sys_.side_ndgs.begin(), sys_.side_ndgs.end(), n) == sys_.side_ndgs.end()) {
      sys_.side_ndgs.push_back(std::move(n));
    }
  }

  void step(const ConstructionStep& s) {
    const SymPoint p = symbolic_point(s.label, a_);
    switch (s.kind) {
      case StepKind::FreePoint: return;
      case StepKind::Midpoint: {
        const SymPoint a = symbolic_point(s.points[0], a_);
        const SymPoint b = symbolic_point(s.points[1], a_);
        emit(Polynomial(2) * p.x - a.x - b.x, s.label);
        emit(Polynomial(2) * p.y - a.y - b.y, s.label);
        return;
      }
      case StepKind::IntersectLines:
        emit(relation::incident(p, symbolic_line(s.lines[0], a_)), s.label);
        emit(relation::incident(p, symbolic_line(s.lines[1], a_)), s.label);
        return;
      case StepKind::FootOfPerpendicular: {
        const SymLine l = symbolic_line(s.lines[0], a_);
        const SymPoint src = symbolic_point(s.points[0], a_);
        emit((p.x - src.x) * l.dx + (p.y - src.y) * l.dy, s.label);
        emit(relation::incident(p, l), s.label);
        return;
      }
      case StepKind::PointOnLine: {
        const Polynomial f = relation::incident(p, symbolic_line(s.lines[0], a_));
        const PointCoords& pc = a_.at(s.label);
        for (Coordinate c : {pc.x, pc.y}) {
          if (c.kind() == Coordinate::Kind::DepVar && f.contains(*c.variable())) {
            side(f.leading_coeff(*c.variable()));
          }
        }
        emit(f, s.label);
        return;
      }
      case StepKind::PointOnCircle: emit(circle_polynomial(p, *s.circle, a_), s.label); return;
      case StepKind::SecondIntersectLineCircle: {
        // P = K + t d with t = -2 (K - O).d / |d|^2, cleared of denominators.
        const SymLine l = symbolic_line(s.lines[0], a_);
        const SymPoint k = symbolic_point(s.points[0], a_);
        const SymCenter c = circle_center(*s.circle, a_);
        const Polynomial dd = l.dx * l.dx + l.dy * l.dy;
        const Polynomial kod = (c.den * k.x - c.num.x) * l.dx + (c.den * k.y - c.num.y) * l.dy;
        emit(c.den * dd * (p.x - k.x) + Polynomial(2) * kod * l.dx, s.label);
        emit(c.den * dd * (p.y - k.y) + Polynomial(2) * kod * l.dy, s.label);
        side(dd);
        side(c.den);
        return;
      }
    }
    throw UnsupportedStepError(std::string(step_kind_name(s.kind)));
  }

  const ConstructionProtocol& proto_;
  const CoordinateAssignment& a_;
  AlgebraicSystem sys_;
};

}  // namespace

AlgebraicSystem algebrize(const ConstructionProtocol& p, const CoordinateAssignment& a) {
  return Algebrizer(p, a).run();
}

}  // namespace geoprove
