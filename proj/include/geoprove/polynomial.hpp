#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace geoprove {

using Integer = mpz_class;
using Rational = mpq_class;

/// Free variables (u) sort below dependent ones (x); auxiliary variables (z)
/// are used only by the Groebner engine and sort above everything else.
enum class VarClass : std::uint8_t { Free = 0, Dependent = 1, Auxiliary = 2 };

class Variable {
 public:
  constexpr Variable() = default;
  constexpr Variable(VarClass cls, std::uint32_t index)
      : key_((static_cast<std::uint32_t>(cls) << 24) | (index & 0xFFFFFFu)) {}

  static constexpr Variable free(std::uint32_t i) { return {VarClass::Free, i}; }
  static constexpr Variable dependent(std::uint32_t i) { return {VarClass::Dependent, i}; }
  static constexpr Variable auxiliary(std::uint32_t i) { return {VarClass::Auxiliary, i}; }

  constexpr VarClass cls() const { return static_cast<VarClass>(key_ >> 24); }
  constexpr std::uint32_t index() const { return key_ & 0xFFFFFFu; }
  constexpr std::uint32_t key() const { return key_; }

  std::string name() const;

  constexpr auto operator<=>(const Variable&) const = default;

 private:
  std::uint32_t key_ = 0;
};

/// Parses `u3`, `x0`, `z1`.
Variable parse_variable(std::string_view text);

struct Power {
  Variable var;
  std::uint32_t exp = 0;
  constexpr bool operator==(const Power&) const = default;
};

/// A power product stored as a list of powers sorted by variable, highest
/// first. The empty list is the constant term.
class Term {
 public:
  using Storage = boost::container::small_vector<Power, 4>;

  Term() = default;
  /// Accepts powers in any order; merges repeats and drops zero exponents.
  explicit Term(Storage powers);

  static Term of(Variable v, std::uint32_t exp = 1);

  std::span<const Power> powers() const { return {powers_.data(), powers_.size()}; }
  bool is_constant() const { return powers_.empty(); }
  std::uint32_t degree_in(Variable v) const;
  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const Power& p : powers_) d += p.exp;
    return d;
  }
  /// Highest variable present; precondition !is_constant().
  Variable main_variable() const { return powers_.front().var; }

  bool divides(const Term& other) const;
  bool coprime(const Term& other) const;
  /// Precondition: divisor.divides(*this).
  Term quotient(const Term& divisor) const;
  Term lcm(const Term& other) const;
  Term without(Variable v) const;
  Term with_power(Variable v, std::uint32_t exp) const;

  Term operator*(const Term& other) const;

  bool operator==(const Term& other) const { return powers_ == other.powers_; }
  /// Lexicographic order induced by the variable order.
  std::strong_ordering operator<=>(const Term& other) const;

  /// `u2*u1*x1` style: free part first, each class with descending index.
  std::string to_string() const;

 private:
  Storage powers_;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Monomials are kept strictly descending in lex order with no
/// zero coefficients, so equal polynomials are structurally identical.
class Polynomial {
 public:
  struct Monomial {
    Term term;
    Integer coeff;
    bool operator==(const Monomial& o) const { return term == o.term && coeff == o.coeff; }
  };

  Polynomial() = default;
  explicit Polynomial(const Integer& c);
  explicit Polynomial(long c) : Polynomial(Integer(c)) {}
  Polynomial(const Term& t, const Integer& c);

  static Polynomial variable(Variable v) { return Polynomial(Term::of(v), Integer(1)); }
  /// Sorts and combines; zero coefficients are dropped.
  static Polynomial from_monomials(std::vector<Monomial> monomials);
  /// Trusts that `monomials` are already strictly descending and nonzero.
  static Polynomial from_sorted(std::vector<Monomial> monomials);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].term.is_constant()); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Monomial> monomials() const { return terms_; }

  const Monomial& leading() const { return terms_.front(); }
  Integer constant_value() const;

  std::uint32_t degree_in(Variable v) const;
  std::uint32_t total_degree() const;
  std::uint32_t max_degree() const;
  /// Coefficient of v^d, as a polynomial free of v.
  Polynomial coefficient(Variable v, std::uint32_t d) const;
  /// Coefficient of v^degree_in(v); the polynomial itself when v is absent.
  Polynomial leading_coeff(Variable v) const;
  /// All variables present, ascending.
  std::vector<Variable> variables() const;
  bool contains(Variable v) const { return degree_in(v) > 0; }
  /// Highest variable present; precondition !is_constant().
  Variable main_variable() const;

  /// Nonnegative gcd of the integer coefficients (0 for the zero polynomial).
  Integer content() const;
  Polynomial primitive_part() const;
  /// Content-free with positive leading coefficient.
  Polynomial normalized() const;
  /// Divides every coefficient by `d`, which must divide each exactly.
  Polynomial divide_integer(const Integer& d) const;
  Polynomial multiply_term(const Term& t, const Integer& c) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;
};

/// Parses the canonical rendering and, more generally, integer expressions in
/// variables with + - * ^ and parentheses. Throws AlgebraError on bad input.
Polynomial parse_polynomial(std::string_view text);

}  // namespace geoprove
