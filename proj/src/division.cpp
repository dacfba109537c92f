#include "geoprove/division.hpp"

#include <algorithm>

#include "geoprove/errors.hpp"

namespace geoprove {

namespace {

Polynomial shift(const Polynomial& p, Variable v, std::uint32_t exp) {
  return exp == 0 ? p : p.multiply_term(Term::of(v, exp), Integer(1));
}

// Plain pseudo-remainder, no exponent bookkeeping.
Polynomial prem(Polynomial r, const Polynomial& q, Variable v) {
  const std::uint32_t m = q.degree_in(v);
  const Polynomial c = q.leading_coeff(v);
  while (!r.is_zero()) {
    const std::uint32_t d = r.degree_in(v);
    if (d < m) break;
    Polynomial s = shift(r.coefficient(v, d), v, d - m);
    r = c * r - s * q;
  }
  return r;
}

// gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content_in(const Polynomial& p, Variable v) {
  const std::uint32_t deg = p.degree_in(v);
  Polynomial g;
  for (std::uint32_t d = 0; d <= deg; ++d) {
    Polynomial c = p.coefficient(v, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Polynomial sign_normalize(Polynomial p) {
  if (!p.is_zero() && p.leading().coeff < 0) p = -p;
  return p;
}

}  // namespace

PseudoDivision pseudo_divide(const Polynomial& p, const Polynomial& q, Variable v) {
  if (q.is_zero()) throw AlgebraError("pseudo-division by the zero polynomial");
  const std::uint32_t m = q.degree_in(v);
  if (m == 0) throw AlgebraError("pseudo-division divisor is free of " + v.name());

  PseudoDivision out;
  out.initial = q.leading_coeff(v);
  out.remainder = p;
  while (!out.remainder.is_zero()) {
    const std::uint32_t d = out.remainder.degree_in(v);
    if (d < m) break;
    Polynomial s = shift(out.remainder.coefficient(v, d), v, d - m);
    out.quotient = out.initial * out.quotient + s;
    out.remainder = out.initial * out.remainder - s * q;
    ++out.exponent;
  }
  while (out.exponent > 0) {
    auto t = divide_exact(out.quotient, out.initial);
    if (!t) break;
    auto r = divide_exact(out.remainder, out.initial);
    if (!r) break;
    out.quotient = std::move(*t);
    out.remainder = std::move(*r);
    --out.exponent;
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return Polynomial{};
  for (Variable v : d.variables()) {
    if (d.degree_in(v) > p.degree_in(v)) return std::nullopt;
  }
  if (d.is_constant()) {
    const Integer c = d.constant_value();
    if (p.content() % c != 0) return std::nullopt;
    std::vector<Polynomial::Monomial> out(p.monomials().begin(), p.monomials().end());
    for (auto& m : out) mpz_divexact(m.coeff.get_mpz_t(), m.coeff.get_mpz_t(), c.get_mpz_t());
    return Polynomial::from_sorted(std::move(out));
  }

  const Polynomial::Monomial& lead = d.leading();
  std::vector<Polynomial::Monomial> quotient;
  Polynomial r = p;
  while (!r.is_zero()) {
    const Polynomial::Monomial& lt = r.leading();
    if (!lead.term.divides(lt.term)) return std::nullopt;
    if (!mpz_divisible_p(lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Term qt = lt.term.quotient(lead.term);
    Integer qc = lt.coeff / lead.coeff;
    r -= d.multiply_term(qt, qc);
    quotient.push_back({std::move(qt), std::move(qc)});
  }
  return Polynomial::from_sorted(std::move(quotient));
}

Polynomial derivative(const Polynomial& p, Variable v) {
  std::vector<Polynomial::Monomial> out;
  for (const auto& m : p.monomials()) {
    const std::uint32_t e = m.term.degree_in(v);
    if (e == 0) continue;
    out.push_back({m.term.with_power(v, e - 1), m.coeff * e});
  }
  return Polynomial::from_monomials(std::move(out));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return sign_normalize(b);
  if (b.is_zero()) return sign_normalize(a);
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return Polynomial(g);
  }
  const Variable v = std::max(a.main_variable(), b.main_variable());
  if (!a.contains(v)) return gcd(a, content_in(b, v));
  if (!b.contains(v)) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial pa = *divide_exact(a, ca);
  Polynomial pb = *divide_exact(b, cb);
  const Polynomial g_content = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  // Primitive polynomial remainder sequence.
  for (;;) {
    Polynomial r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.contains(v)) {
      pb = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = *divide_exact(r, content_in(r, v));
  }
  return sign_normalize(g_content * pb);
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (p.is_constant()) return Polynomial(1);
  const Variable v = p.main_variable();
  const Polynomial c = content_in(p, v);
  const Polynomial pp = *divide_exact(p, c);
  const Polynomial g = gcd(pp, derivative(pp, v));
  const Polynomial s = *divide_exact(pp, g);
  return (square_free_part(c) * s).normalized();
}

Term monomial_content(const Polynomial& p) {
  if (p.is_zero()) return {};
  auto mons = p.monomials();
  Term::Storage common(mons[0].term.powers().begin(), mons[0].term.powers().end());
  for (std::size_t i = 1; i < mons.size() && !common.empty(); ++i) {
    Term::Storage next;
    for (const Power& c : common) {
      const std::uint32_t e = mons[i].term.degree_in(c.var);
      if (e > 0) next.push_back({c.var, std::min(e, c.exp)});
    }
    common = std::move(next);
  }
  return Term(std::move(common));
}

Rational evaluate(const Polynomial& p, const Assignment& assignment) {
  Rational total = 0;
  for (const auto& m : p.monomials()) {
    Rational value = m.coeff;
    for (const Power& pw : m.term.powers()) {
      auto it = assignment.find(pw.var);
      if (it == assignment.end()) throw MissingVariableError("no value for variable " + pw.var.name());
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), it->second.get_num_mpz_t(), pw.exp);
      mpz_pow_ui(f.get_den_mpz_t(), it->second.get_den_mpz_t(), pw.exp);
      value *= f;
    }
    total += value;
  }
  total.canonicalize();
  return total;
}

}  // namespace geoprove
