#include "geoprove/wu.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include <omp.h>

#include "geoprove/division.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/numeric.hpp"

namespace geoprove {

// ---------------------------------------------------------- result types

bool TriangularSystem::well_formed(std::string* why) const {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const ChainEntry& e = chain[i];
    if (i > 0 && !(chain[i - 1].main_var < e.main_var)) return fail("main variables not increasing at entry " + std::to_string(i));
    if (e.poly.degree_in(e.main_var) == 0) return fail("entry " + std::to_string(i) + " is free of its main variable");
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (e.poly.contains(chain[j].main_var)) {
        return fail("entry " + std::to_string(i) + " contains later variable " + chain[j].main_var.name());
      }
    }
    if (e.initial.is_zero() || !(e.initial == e.poly.leading_coeff(e.main_var))) {
      return fail("entry " + std::to_string(i) + " has a wrong initial");
    }
  }
  return true;
}

std::string_view condition_kind_name(GeometricCondition::Kind k) {
  switch (k) {
    case GeometricCondition::Kind::NotIdentical: return "not_identical";
    case GeometricCondition::Kind::NotCollinear: return "not_collinear";
    case GeometricCondition::Kind::NotPerpendicular: return "not_perpendicular";
    case GeometricCondition::Kind::NotOnCircle: return "not_on_circle";
    case GeometricCondition::Kind::NotParallel: return "not_parallel";
  }
  return "?";
}

std::string GeometricCondition::to_string() const {
  const auto& p = points;
  switch (kind) {
    case Kind::NotIdentical: return p[0] + " ≢ " + p[1];
    case Kind::NotCollinear: return p[0] + ", " + p[1] + " and " + p[2] + " are not collinear";
    case Kind::NotPerpendicular: return p[0] + p[1] + " ⊥̸ " + p[2] + p[3];
    case Kind::NotOnCircle: return p[0] + " is not on the circle with centre " + p[1] + " through " + p[2];
    case Kind::NotParallel: return p[0] + p[1] + " ∦ " + p[2] + p[3];
  }
  return {};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::NotProved: return "not proved";
    case Verdict::Timeout: return "timeout";
    case Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::string_view method_name(Method m) { return m == Method::Wu ? "wu" : "groebner"; }

// ---------------------------------------------------------- triangulation

namespace {

Polynomial strip_content(const Polynomial& p) { return p.is_zero() ? p : p.primitive_part(); }

struct Candidate {
  Polynomial poly;
  std::size_t order;  // input position, for tie-breaking
};

std::size_t choose_pivot(const std::vector<Candidate>& s, Variable v, PivotRule rule) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto key = [&](std::size_t k) {
      const std::size_t size = rule == PivotRule::DegreeThenSize ? s[k].poly.size() : 0;
      return std::tuple(s[k].poly.degree_in(v), size, s[k].order);
    };
    if (key(i) < key(best)) best = i;
  }
  return best;
}

}  // namespace

Triangulation triangulate(const AlgebraicSystem& sys, const Budget& budget, const WuOptions& options) {
  std::vector<Candidate> work;
  std::size_t next_order = 0;
  for (const auto& p : sys.construction_polys) {
    if (!p.is_zero()) work.push_back({p, next_order++});
  }

  std::vector<Variable> dep;
  for (const auto& c : work) {
    for (Variable v : c.poly.variables()) {
      if (v.cls() != VarClass::Free) dep.push_back(v);
    }
  }
  std::sort(dep.begin(), dep.end(), std::greater<>());
  dep.erase(std::unique(dep.begin(), dep.end()), dep.end());

  std::vector<ChainEntry> reversed;
  for (Variable v : dep) {
    std::vector<Candidate> s;
    std::vector<Candidate> rest;
    for (auto& c : work) (c.poly.contains(v) ? s : rest).push_back(std::move(c));
    if (s.empty()) {
      work = std::move(rest);
      continue;
    }
    while (s.size() > 1) {
      const std::size_t pivot = choose_pivot(s, v, options.pivot);
      std::vector<Candidate> next;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == pivot) {
          next.push_back(s[i]);
          continue;
        }
        Polynomial r = strip_content(pseudo_divide(s[i].poly, s[pivot].poly, v).remainder);
        if (r.is_zero()) continue;
        if (r.is_constant()) throw InconsistentSystemError("construction polynomials reduce to a nonzero constant");
        (r.contains(v) ? next : rest).push_back({std::move(r), s[i].order});
      }
      s = std::move(next);
      std::size_t live = 0;
      for (const auto& c : s) live += c.poly.size();
      for (const auto& c : rest) live += c.poly.size();
      budget.check(live);
    }
    Polynomial initial = s[0].poly.leading_coeff(v);
    reversed.push_back({v, std::move(s[0].poly), std::move(initial)});
    work = std::move(rest);
  }
  if (!work.empty()) {
    throw InconsistentSystemError("construction constrains the free variables: " + work[0].poly.to_string() +
                                  " = 0");
  }

  Triangulation out;
  out.system.chain.assign(std::make_move_iterator(reversed.rbegin()), std::make_move_iterator(reversed.rend()));
  std::vector<NdgCondition> raw;
  for (std::size_t i = 0; i < out.system.chain.size(); ++i) {
    raw.push_back({out.system.chain[i].initial, NdgOrigin::TriangulationInitial, static_cast<int>(i), {}, {}});
  }
  for (const auto& p : sys.side_ndgs) raw.push_back({p, NdgOrigin::AlgebraizationSide, -1, {}, {}});
  out.ndgs = normalize_ndgs(raw, options.coprime_refinement);
  return out;
}

WuCertificate final_remainder(const Polynomial& g, const TriangularSystem& t, const Budget& budget) {
  WuCertificate cert;
  cert.statement = g;
  Polynomial r = g;
  for (std::size_t k = t.chain.size(); k-- > 0;) {
    const ChainEntry& e = t.chain[k];
    PseudoDivision pd = pseudo_divide(r, e.poly, e.main_var);
    CertificateStep step;
    step.dividend_id = cert.steps.size();
    step.chain_index = k;
    step.content = pd.remainder.is_zero() ? Integer(1) : pd.remainder.content();
    step.remainder = pd.remainder.is_zero() ? pd.remainder : pd.remainder.divide_integer(step.content);
    step.quotient = std::move(pd.quotient);
    step.initial = std::move(pd.initial);
    step.exponent = pd.exponent;
    r = step.remainder;
    cert.steps.push_back(std::move(step));
    budget.check(r.size());
  }
  cert.final_remainder = std::move(r);
  return cert;
}

bool verify_certificate(const WuCertificate& c, const TriangularSystem& t) {
  if (!t.well_formed()) return false;
  Polynomial dividend = c.statement;
  std::size_t expect_index = t.chain.size();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const CertificateStep& s = c.steps[i];
    if (s.dividend_id != i || expect_index == 0 || s.chain_index != expect_index - 1) return false;
    --expect_index;
    const ChainEntry& e = t.chain[s.chain_index];
    if (!(s.initial == e.initial) || s.content <= 0) return false;
    if (s.remainder.degree_in(e.main_var) >= e.poly.degree_in(e.main_var)) return false;
    const Polynomial lhs = s.initial.pow(s.exponent) * dividend;
    const Polynomial rhs = s.quotient * e.poly + s.remainder * s.content;
    if (!(lhs == rhs)) return false;
    dividend = s.remainder;
  }
  if (expect_index != 0) return false;
  return dividend == c.final_remainder;
}

bool verify_certificate(const WuCertificate& c, const AlgebraicSystem& sys, const TriangularSystem& t) {
  const auto& st = sys.statement_polys;
  if (std::find(st.begin(), st.end(), c.statement) == st.end()) return false;
  return verify_certificate(c, t);
}

// ------------------------------------------------------------ NDG forms

std::vector<NdgCondition> normalize_ndgs(const std::vector<NdgCondition>& raw, bool coprime_refinement) {
  std::vector<NdgCondition> out;
  auto add = [&](Polynomial p, const NdgCondition& src) {
    p = p.normalized();
    if (p.is_constant()) return;
    for (const auto& e : out) {
      if (e.poly == p) return;
    }
    NdgCondition c = src;
    c.poly = std::move(p);
    c.geometric.reset();
    c.real_reading.reset();
    out.push_back(std::move(c));
  };
  for (const auto& c : raw) {
    if (c.poly.is_zero()) continue;
    const Term mono = monomial_content(c.poly);
    std::vector<Power> vars(mono.powers().begin(), mono.powers().end());
    std::reverse(vars.begin(), vars.end());  // ascending variables
    for (const Power& pw : vars) add(Polynomial::variable(pw.var), c);
    const Polynomial rest = mono.is_constant() ? c.poly : *divide_exact(c.poly, Polynomial(mono, Integer(1)));
    add(square_free_part(rest.normalized()), c);
  }
  if (!coprime_refinement) return out;

  // Replace any pair with a common factor g by g, a/g, b/g until coprime.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < out.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < out.size() && !changed; ++j) {
        const Polynomial g = gcd(out[i].poly, out[j].poly).normalized();
        if (g.is_constant()) continue;
        const NdgCondition a = out[i];
        const NdgCondition b = out[j];
        const std::vector<NdgCondition> parts = normalize_ndgs(
            {{g, a.origin, a.chain_index, {}, {}},
             {*divide_exact(a.poly, g), a.origin, a.chain_index, {}, {}},
             {*divide_exact(b.poly, g), b.origin, b.chain_index, {}, {}}},
            false);
        // The parts take the place of the first member of the pair.
        std::vector<NdgCondition> next(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i));
        auto present = [&](const Polynomial& q) {
          return std::any_of(next.begin(), next.end(), [&](const auto& e) { return e.poly == q; });
        };
        for (const auto& e : parts) {
          if (!present(e.poly)) next.push_back(e);
        }
        for (std::size_t k = i + 1; k < out.size(); ++k) {
          if (k != j && !present(out[k].poly)) next.push_back(out[k]);
        }
        out = std::move(next);
        changed = true;
      }
    }
  }
  return out;
}

namespace {

// Variables of an NDG shaped c1*v1^(2k1) + ... with every ci > 0 and at
// least two summands; empty otherwise.
std::vector<Variable> even_power_sum_vars(const Polynomial& p) {
  if (p.size() < 2) return {};
  std::vector<Variable> vars;
  for (const auto& m : p.monomials()) {
    if (m.coeff <= 0 || m.term.powers().size() != 1 || m.term.powers()[0].exp % 2 != 0) return {};
    vars.push_back(m.term.powers()[0].var);
  }
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) return {};
  return vars;
}

}  // namespace

std::vector<NdgCondition> real_simplify(const std::vector<NdgCondition>& ndgs) {
  std::vector<NdgCondition> out;
  for (const auto& c : ndgs) {
    const auto vars = even_power_sum_vars(c.poly);
    if (vars.empty()) {
      out.push_back(c);
      continue;
    }
    const bool implied = std::any_of(vars.begin(), vars.end(), [&](Variable v) {
      return std::any_of(ndgs.begin(), ndgs.end(), [&](const auto& o) { return o.poly == Polynomial::variable(v); });
    });
    if (implied) continue;
    NdgCondition r = c;
    std::string text = "not (";
    for (std::size_t i = 0; i < vars.size(); ++i) text += (i ? " and " : "") + vars[i].name() + " = 0";
    r.real_reading = text + ")";
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------- proving

ProofResult prove_wu(const AlgebraicSystem& sys, const Budget& budget, const WuOptions& options) {
  using Clock = std::chrono::steady_clock;
  ProofResult result;
  result.method = Method::Wu;
  const auto t0 = Clock::now();
  Triangulation tri;
  try {
    tri = triangulate(sys, budget, options);
  } catch (const InconsistentSystemError& e) {
    result.verdict = Verdict::Inconsistent;
    result.message = e.what();
    return result;
  }
  const auto t1 = Clock::now();

  const auto& goals = sys.statement_polys;
  std::vector<WuCertificate> certs(goals.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (options.parallel && goals.size() > 1)
  for (std::size_t i = 0; i < goals.size(); ++i) {
    try {
      certs[i] = final_remainder(goals[i], tri.system, budget);
    } catch (...) {
#pragma omp critical(geoprove_wu_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  const auto t2 = Clock::now();

  result.verdict = Verdict::Proved;
  for (const auto& c : certs) {
    if (!c.final_remainder.is_zero()) {
      result.verdict = Verdict::NotProved;
      result.witness = c.final_remainder;
      break;
    }
  }
  result.chain = std::move(tri.system);
  result.ndgs = std::move(tri.ndgs);
  result.real_ndgs = real_simplify(result.ndgs);
  result.certificates = std::move(certs);
  result.stats.triangulate_seconds = std::chrono::duration<double>(t1 - t0).count();
  result.stats.remainder_seconds = std::chrono::duration<double>(t2 - t1).count();
  result.stats.peak_monomials = budget.peak_monomials();
  for (const auto& e : result.chain->chain) result.stats.max_degree = std::max(result.stats.max_degree, e.poly.total_degree());
  return result;
}

// ----------------------------------------------------------- soundness

namespace {

bool rational_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_sqrt(out.get_num_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(out.get_den_mpz_t(), q.get_den_mpz_t());
  out.canonicalize();
  return true;
}

// Rational roots of the chain entry in its main variable under `values`;
// `hint` is tried for degrees above two.
std::vector<Rational> rational_roots(const ChainEntry& e, const Assignment& values, const Rational* hint) {
  const std::uint32_t deg = e.poly.degree_in(e.main_var);
  std::vector<Rational> c(deg + 1);
  for (std::uint32_t d = 0; d <= deg; ++d) c[d] = evaluate(e.poly.coefficient(e.main_var, d), values);
  std::vector<Rational> roots;
  if (c[deg] == 0) return roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (deg == 2) {
    Rational s;
    if (rational_sqrt(c[1] * c[1] - 4 * c[2] * c[0], s)) {
      roots.push_back((-c[1] + s) / (2 * c[2]));
      if (s != 0) roots.push_back((-c[1] - s) / (2 * c[2]));
    }
  } else if (hint) {
    Rational v = 0;
    for (std::uint32_t d = deg + 1; d-- > 0;) v = v * *hint + c[d];
    if (v == 0) roots.push_back(*hint);
  }
  return roots;
}

}  // namespace

SoundnessReport sample_soundness(const ConstructionProtocol& p, const CoordinateAssignment& a,
                                 const AlgebraicSystem& sys, const ProofResult& r, int samples,
                                 std::uint64_t seed) {
  SoundnessReport report;
  if (!r.chain) return report;
  InstanceSampler sampler(seed);
  const int max_attempts = samples * 50;
  while (report.accepted < samples && report.attempted < max_attempts) {
    ++report.attempted;
    auto inst = sampler.sample(p, a);
    if (!inst) continue;
    Assignment values;
    for (Variable v : sys.free_vars) {
      auto it = inst->values.find(v);
      values[v] = it != inst->values.end() ? it->second : sampler.random_rational();
    }
    bool solved = true;
    for (const ChainEntry& e : r.chain->chain) {
      auto hint_it = inst->values.find(e.main_var);
      const Rational* hint = hint_it != inst->values.end() ? &hint_it->second : nullptr;
      const auto roots = rational_roots(e, values, hint);
      if (roots.empty()) {
        solved = false;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      values[e.main_var] = roots[pick(sampler.engine())];
    }
    if (!solved) continue;
    // Dependent variables outside the chain keep their instance values.
    for (const auto& [v, val] : inst->values) values.emplace(v, val);

    const bool ndgs_hold = std::all_of(r.ndgs.begin(), r.ndgs.end(),
                                       [&](const auto& n) { return evaluate(n.poly, values) != 0; });
    if (!ndgs_hold) continue;
    ++report.accepted;
    for (const auto& g : sys.statement_polys) {
      if (evaluate(g, values) != 0) {
        ++report.failures;
        break;
      }
    }
  }
  return report;
}

}  // namespace geoprove
