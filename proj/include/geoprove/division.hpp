#pragma once

#include <map>
#include <optional>

#include "geoprove/polynomial.hpp"

namespace geoprove {

/// initial^exponent * dividend == quotient * divisor + remainder, and the
/// remainder has lower degree than the divisor in the division variable.
struct PseudoDivision {
  Polynomial quotient;
  Polynomial remainder;
  Polynomial initial;
  unsigned exponent = 0;
};

/// Pseudo-division of `p` by `q` with respect to `v`. The exponent is the
/// number of reduction steps performed, then lowered while the initial
/// divides both quotient and remainder exactly.
/// Throws AlgebraError if `q` is zero or free of `v`.
PseudoDivision pseudo_divide(const Polynomial& p, const Polynomial& q, Variable v);

/// Exact quotient p / d when d divides p in Z[vars], otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

Polynomial derivative(const Polynomial& p, Variable v);

/// Greatest common divisor with positive leading coefficient; the integer
/// gcd of the contents is kept. gcd(0, 0) == 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors of a content-free `p`,
/// computed by gcd with partial derivatives (no factorization).
Polynomial square_free_part(const Polynomial& p);

/// Largest power product dividing every monomial (the constant term for 0).
Term monomial_content(const Polynomial& p);

using Assignment = std::map<Variable, Rational>;

/// Exact value of `p`; throws MissingVariableError if a variable is unbound.
Rational evaluate(const Polynomial& p, const Assignment& assignment);

}  // namespace geoprove
