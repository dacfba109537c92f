#include "geoprove/ndg.hpp"

#include <algorithm>
#include <set>

#include "geoprove/division.hpp"

namespace geoprove {

std::vector<Variable> extract_variables(const Polynomial& p) { return p.variables(); }

namespace {

std::vector<Variable> point_vars(const PointCoords& pc) {
  std::vector<Variable> out;
  for (Coordinate c : {pc.x, pc.y}) {
    if (auto v = c.variable()) out.push_back(*v);
  }
  return out;
}

bool contains(const std::vector<Variable>& vs, Variable v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

bool covers(const std::vector<std::size_t>& set, const std::vector<std::vector<Variable>>& carried,
            const std::vector<Variable>& vars) {
  return std::all_of(vars.begin(), vars.end(), [&](Variable v) {
    return std::any_of(set.begin(), set.end(), [&](std::size_t i) { return contains(carried[i], v); });
  });
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::vector<Label>> candidate_point_sets(const std::vector<Variable>& vars,
                                                     const ConstructionProtocol& p, const CoordinateAssignment& a,
                                                     const std::vector<Variable>& known_nonzero,
                                                     std::size_t max_size) {
  if (vars.empty()) return {};
  // Points in declaration order with the variables they carry.
  std::vector<Label> labels;
  std::vector<std::vector<Variable>> carried;
  for (const auto& s : p.steps) {
    labels.push_back(s.label);
    carried.push_back(point_vars(a.at(s.label)));
  }
  std::vector<std::size_t> relevant;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::any_of(carried[i].begin(), carried[i].end(), [&](Variable v) { return contains(vars, v); })) {
      relevant.push_back(i);
    }
  }

  std::vector<std::vector<std::size_t>> minimal;
  for (std::size_t k = 1; k <= std::min(max_size, relevant.size()); ++k) {
    for_each_combination(relevant.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<std::size_t> set;
      for (std::size_t i : idx) set.push_back(relevant[i]);
      if (!covers(set, carried, vars)) return;
      for (std::size_t drop = 0; drop < set.size(); ++drop) {
        std::vector<std::size_t> smaller = set;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!smaller.empty() && covers(smaller, carried, vars)) return;
      }
      minimal.push_back(std::move(set));
    });
  }

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& cover : minimal) {
    std::vector<std::size_t> neutral;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (std::find(cover.begin(), cover.end(), i) != cover.end()) continue;
      const bool ok = std::all_of(carried[i].begin(), carried[i].end(),
                                  [&](Variable v) { return contains(vars, v) || contains(known_nonzero, v); });
      if (ok) neutral.push_back(i);
    }
    for (std::size_t k = 0; k + cover.size() <= max_size && k <= neutral.size(); ++k) {
      for_each_combination(neutral.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> set = cover;
        for (std::size_t i : idx) set.push_back(neutral[i]);
        std::sort(set.begin(), set.end());
        if (seen.insert(set).second) sets.push_back(std::move(set));
      });
    }
  }
  std::stable_sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });

  std::vector<std::vector<Label>> out;
  for (const auto& s : sets) {
    std::vector<Label> named;
    for (std::size_t i : s) named.push_back(labels[i]);
    out.push_back(std::move(named));
  }
  return out;
}

Polynomial condition_polynomial(const GeometricCondition& c, const CoordinateAssignment& a) {
  auto pt = [&](std::size_t i) { return symbolic_point(c.points[i], a); };
  auto line = [&](std::size_t i) {
    return symbolic_line(LineExpr::through(c.points[i], c.points[i + 1]), a);
  };
  switch (c.kind) {
    case GeometricCondition::Kind::NotIdentical: {
      const SymPoint p = pt(0);
      const SymPoint q = pt(1);
      const Polynomial dx = p.x - q.x;
      const Polynomial dy = p.y - q.y;
      if (dx.is_zero()) return dy;
      if (dy.is_zero()) return dx;
      return dx * dx + dy * dy;
    }
    case GeometricCondition::Kind::NotCollinear: return relation::collinear(pt(0), pt(1), pt(2));
    case GeometricCondition::Kind::NotPerpendicular: return relation::perpendicular(line(0), line(2));
    case GeometricCondition::Kind::NotOnCircle: return relation::on_circle(pt(0), pt(1), pt(2));
    case GeometricCondition::Kind::NotParallel: return relation::parallel(line(0), line(2));
  }
  return {};
}

bool matches_ndg(const Polynomial& candidate, const Polynomial& f, const std::vector<Polynomial>& assumed) {
  if (candidate.is_zero() || f.is_zero()) return false;
  auto q = divide_exact(candidate, f);
  if (!q) return false;
  for (bool progress = true; progress && !q->is_constant();) {
    progress = false;
    for (const auto& s : assumed) {
      if (s.is_constant()) continue;
      while (auto next = divide_exact(*q, s)) {
        *q = std::move(*next);
        progress = true;
      }
    }
  }
  return q->is_constant();
}

namespace {

using Kind = GeometricCondition::Kind;

// Conditions over exactly the points of `set`, in kind order.
std::vector<GeometricCondition> conditions_on(const std::vector<Label>& set, const CoordinateAssignment& a) {
  std::vector<GeometricCondition> out;
  const std::size_t n = set.size();
  std::vector<std::pair<std::size_t, std::size_t>> lines;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) lines.push_back({i, j});
  }
  auto uses_all = [&](std::initializer_list<std::size_t> idx) {
    std::set<std::size_t> used(idx);
    return used.size() == n;
  };

  if (n == 2) {
    const SymPoint p = symbolic_point(set[0], a);
    const SymPoint q = symbolic_point(set[1], a);
    if ((p.x - q.x).is_zero() != (p.y - q.y).is_zero()) out.push_back({Kind::NotIdentical, {set[0], set[1]}});
  }
  if (n == 3) out.push_back({Kind::NotCollinear, {set[0], set[1], set[2]}});
  for (std::size_t la = 0; la < lines.size(); ++la) {
    for (std::size_t lb = 0; lb <= la; ++lb) {
      const auto [a1, a2] = lines[la];
      const auto [b1, b2] = lines[lb];
      if (!uses_all({a1, a2, b1, b2})) continue;
      out.push_back({Kind::NotPerpendicular, {set[a1], set[a2], set[b1], set[b2]}});
    }
  }
  if (n == 3) {
    for (std::size_t pi = 0; pi < 3; ++pi) {
      for (std::size_t oi = 0; oi < 3; ++oi) {
        if (oi == pi) continue;
        const std::size_t ti = 3 - pi - oi;
        out.push_back({Kind::NotOnCircle, {set[pi], set[oi], set[ti]}});
      }
    }
  }
  for (std::size_t la = 0; la < lines.size(); ++la) {
    for (std::size_t lb = 0; lb < la; ++lb) {
      const auto [a1, a2] = lines[la];
      const auto [b1, b2] = lines[lb];
      if (!uses_all({a1, a2, b1, b2})) continue;
      out.push_back({Kind::NotParallel, {set[a1], set[a2], set[b1], set[b2]}});
    }
  }
  return out;
}

std::vector<Variable> single_variables(const std::vector<Polynomial>& polys) {
  std::vector<Variable> out;
  for (const auto& p : polys) {
    if (p.size() == 1 && p.leading().coeff == 1 && p.leading().term.powers().size() == 1 &&
        p.leading().term.powers()[0].exp == 1) {
      out.push_back(p.leading().term.powers()[0].var);
    }
  }
  return out;
}

}  // namespace

std::vector<GeometricCondition> all_matches(const Polynomial& f, const ConstructionProtocol& p,
                                            const CoordinateAssignment& a, const std::vector<Polynomial>& assumed,
                                            const MatchOptions& options) {
  std::vector<GeometricCondition> out;
  if (f.is_constant()) return out;
  std::size_t tried = 0;
  const auto sets =
      candidate_point_sets(extract_variables(f), p, a, single_variables(assumed), options.max_set_size);
  for (const auto& set : sets) {
    for (const auto& c : conditions_on(set, a)) {
      if (++tried > options.max_candidates) return out;
      if (matches_ndg(condition_polynomial(c, a), f, assumed)) out.push_back(c);
    }
  }
  return out;
}

int free_point_count(const GeometricCondition& c, const ConstructionProtocol& p) {
  std::set<Label> distinct(c.points.begin(), c.points.end());
  int n = 0;
  for (const auto& l : distinct) {
    const ConstructionStep* s = p.find(l);
    if (s && (s->is_free() || s->is_semi_free())) ++n;
  }
  return n;
}

std::optional<GeometricCondition> match_ndg(const Polynomial& f, const ConstructionProtocol& p,
                                            const CoordinateAssignment& a, const std::vector<Polynomial>& assumed,
                                            const MatchOptions& options) {
  const auto matches = all_matches(f, p, a, assumed, options);
  if (matches.empty()) return std::nullopt;
  // Exact readings (no cofactor) come first, then the free-point count.
  auto rank = [&](const GeometricCondition& c) {
    return std::pair(matches_ndg(condition_polynomial(c, a), f, {}), free_point_count(c, p));
  };
  const GeometricCondition* best = &matches[0];
  auto best_rank = rank(*best);
  for (const auto& m : matches) {
    const auto r = rank(m);
    if (r > best_rank) {
      best = &m;
      best_rank = r;
    }
  }
  return *best;
}

std::vector<NdgCondition> interpret_all(const std::vector<NdgCondition>& ndgs, const ConstructionProtocol& p,
                                        const CoordinateAssignment& a, const MatchOptions& options) {
  std::vector<Polynomial> assumed;
  for (const auto& n : ndgs) assumed.push_back(n.poly);
  std::vector<NdgCondition> out = ndgs;
  for (auto& n : out) n.geometric = match_ndg(n.poly, p, a, assumed, options);
  return out;
}

}  // namespace geoprove
