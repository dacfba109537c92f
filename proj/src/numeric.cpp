#include "geoprove/numeric.hpp"

namespace geoprove {

namespace {

struct NumLine {
  RationalPoint through;
  Rational dx, dy;
};

struct Degenerate {};

using Points = std::map<Label, RationalPoint>;

NumLine numeric_line(const LineExpr& l, const Points& pts) {
  switch (l.kind) {
    case LineExpr::Kind::Through: {
      const RationalPoint& a = pts.at(l.points[0]);
      const RationalPoint& b = pts.at(l.points[1]);
      return {a, b.first - a.first, b.second - a.second};
    }
    case LineExpr::Kind::Perp: {
      NumLine base = numeric_line(*l.base, pts);
      return {pts.at(l.points[0]), -base.dy, base.dx};
    }
    case LineExpr::Kind::Parallel: {
      NumLine base = numeric_line(*l.base, pts);
      return {pts.at(l.points[0]), base.dx, base.dy};
    }
  }
  return {};
}

NumLine nondegenerate(NumLine l) {
  if (l.dx == 0 && l.dy == 0) throw Degenerate{};
  return l;
}

// Second intersection of the line through `k` with direction d and the
// circle centred at `o` passing through `k`.
RationalPoint reflect_chord(const RationalPoint& k, const Rational& dx, const Rational& dy, const RationalPoint& o) {
  const Rational dd = dx * dx + dy * dy;
  if (dd == 0) throw Degenerate{};
  const Rational t = -2 * ((k.first - o.first) * dx + (k.second - o.second) * dy) / dd;
  return {k.first + t * dx, k.second + t * dy};
}

RationalPoint circumcenter(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  const Rational d = 2 * (a.first * (b.second - c.second) + b.first * (c.second - a.second) +
                          c.first * (a.second - b.second));
  if (d == 0) throw Degenerate{};
  const Rational na = a.first * a.first + a.second * a.second;
  const Rational nb = b.first * b.first + b.second * b.second;
  const Rational nc = c.first * c.first + c.second * c.second;
  return {(na * (b.second - c.second) + nb * (c.second - a.second) + nc * (a.second - b.second)) / d,
          (na * (c.first - b.first) + nb * (a.first - c.first) + nc * (b.first - a.first)) / d};
}

// Centre and a known point of the circle.
std::pair<RationalPoint, RationalPoint> circle_of(const CircleExpr& c, const Points& pts) {
  if (c.kind == CircleExpr::Kind::CenterThrough) return {pts.at(c.points[0]), pts.at(c.points[1])};
  const RationalPoint& a = pts.at(c.points[0]);
  return {circumcenter(a, pts.at(c.points[1]), pts.at(c.points[2])), a};
}

}  // namespace

InstanceSampler::InstanceSampler(std::uint64_t seed, int magnitude) : rng_(seed), magnitude_(magnitude) {}

Rational InstanceSampler::random_rational() {
  std::uniform_int_distribution<int> num(-magnitude_, magnitude_);
  std::uniform_int_distribution<int> den(1, 7);
  Rational r(num(rng_), den(rng_));
  r.canonicalize();
  return r;
}

std::optional<NumericInstance> InstanceSampler::sample(const ConstructionProtocol& p, const CoordinateAssignment& a) {
  NumericInstance out;
  Points& pts = out.points;
  try {
    for (const auto& s : p.steps) {
      const PointCoords& pc = a.at(s.label);
      RationalPoint v;
      switch (s.kind) {
        case StepKind::FreePoint: {
          // Pinned coordinates are Zero; an axis-pinned point gets a nonzero value.
          const bool zx = pc.x.kind() == Coordinate::Kind::Zero;
          const bool zy = pc.y.kind() == Coordinate::Kind::Zero;
          auto draw = [&](bool zero, bool other_zero) -> Rational {
            if (zero) return 0;
            Rational r = random_rational();
            if (other_zero && r == 0) throw Degenerate{};
            return r;
          };
          v = {draw(zx, zy), draw(zy, zx)};
          break;
        }
        case StepKind::Midpoint: {
          const RationalPoint& b = pts.at(s.points[0]);
          const RationalPoint& c = pts.at(s.points[1]);
          v = {(b.first + c.first) / 2, (b.second + c.second) / 2};
          break;
        }
        case StepKind::IntersectLines: {
          const NumLine l1 = nondegenerate(numeric_line(s.lines[0], pts));
          const NumLine l2 = nondegenerate(numeric_line(s.lines[1], pts));
          const Rational det = l1.dx * l2.dy - l1.dy * l2.dx;
          if (det == 0) throw Degenerate{};
          const Rational wx = l2.through.first - l1.through.first;
          const Rational wy = l2.through.second - l1.through.second;
          const Rational t = (wx * l2.dy - wy * l2.dx) / det;
          v = {l1.through.first + t * l1.dx, l1.through.second + t * l1.dy};
          break;
        }
        case StepKind::FootOfPerpendicular: {
          const NumLine l = nondegenerate(numeric_line(s.lines[0], pts));
          const RationalPoint& q = pts.at(s.points[0]);
          const Rational dd = l.dx * l.dx + l.dy * l.dy;
          if (dd == 0) throw Degenerate{};
          const Rational t = ((q.first - l.through.first) * l.dx + (q.second - l.through.second) * l.dy) / dd;
          v = {l.through.first + t * l.dx, l.through.second + t * l.dy};
          break;
        }
        case StepKind::PointOnLine: {
          const NumLine l = nondegenerate(numeric_line(s.lines[0], pts));
          const Rational t = random_rational();
          v = {l.through.first + t * l.dx, l.through.second + t * l.dy};
          break;
        }
        case StepKind::PointOnCircle: {
          const auto [center, known] = circle_of(*s.circle, pts);
          const Rational dx = random_rational();
          const Rational dy = random_rational();
          if (dx == 0 && dy == 0) throw Degenerate{};
          v = reflect_chord(known, dx, dy, center);
          break;
        }
        case StepKind::SecondIntersectLineCircle: {
          const NumLine l = nondegenerate(numeric_line(s.lines[0], pts));
          const RationalPoint center = circle_of(*s.circle, pts).first;
          v = reflect_chord(pts.at(s.points[0]), l.dx, l.dy, center);
          break;
        }
      }
      pts[s.label] = v;

      // Bind or check the coordinate variables.
      for (const auto& [coord, value] : {std::pair{pc.x, v.first}, std::pair{pc.y, v.second}}) {
        const auto var = coord.variable();
        if (!var) {
          if (value != 0) return std::nullopt;
          continue;
        }
        auto [it, inserted] = out.values.emplace(*var, value);
        if (!inserted && it->second != value) return std::nullopt;
      }
    }
  } catch (const Degenerate&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace geoprove
