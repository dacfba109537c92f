#include <doctest.h>

#include "geoprove/errors.hpp"
#include "support.hpp"

using namespace geoprove;
using geoprove::test::P;
using geoprove::test::PolyGen;

TEST_SUITE("division") {
  TEST_CASE("exact division example") {
    const Variable x1 = Variable::dependent(1);
    const auto d = pseudo_divide(P("x1^2"), P("x1"), x1);
    CHECK(d.quotient == P("x1"));
    CHECK(d.remainder.is_zero());
    CHECK(d.exponent == 0);
  }

  TEST_CASE("pseudo-division with a symbolic initial") {
    const Variable x1 = Variable::dependent(1);
    const auto d = pseudo_divide(P("u1*x1^2 + 1"), P("u2*x1 + u3"), x1);
    CHECK(d.initial == P("u2"));
    CHECK(d.exponent == 2);
    CHECK(d.quotient == P("u1*u2*x1 - u1*u3"));
    CHECK(d.remainder == P("u1*u3^2 + u2^2"));
  }

  TEST_CASE("pseudo-division identity on random inputs") {
    PolyGen g(31);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const Variable v = g.variable();
      const Polynomial p = g.poly(6, 4);
      const Polynomial q = g.poly_in(v, 4, 3);
      const auto d = pseudo_divide(p, q, v);
      const Polynomial lhs = d.initial.pow(d.exponent) * p;
      const Polynomial rhs = d.quotient * q + d.remainder;
      const bool ok = lhs == rhs && d.remainder.degree_in(v) < q.degree_in(v) && d.initial == q.leading_coeff(v);
      if (!ok) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("division by a polynomial free of the variable is rejected") {
    CHECK_THROWS_AS(pseudo_divide(P("x1"), P("u1"), Variable::dependent(1)), AlgebraError);
    CHECK_THROWS_AS(pseudo_divide(P("x1"), Polynomial(), Variable::dependent(1)), AlgebraError);
  }

  TEST_CASE("exact quotient") {
    CHECK(divide_exact(P("x1^2 - u1^2"), P("x1 - u1")) == P("x1 + u1"));
    CHECK_FALSE(divide_exact(P("x1^2 + u1^2"), P("x1 - u1")).has_value());
    PolyGen g(32);
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = g.poly(4, 2), b = g.poly(4, 2);
      if (b.is_zero()) continue;
      const auto q = divide_exact(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }

  TEST_CASE("gcd recovers a planted common factor") {
    PolyGen g(33);
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
      const Polynomial c = g.poly(3, 2), a = g.poly(3, 2), b = g.poly(3, 2);
      if (c.is_constant() || a.is_zero() || b.is_zero()) continue;
      const Polynomial d = gcd(a * c, b * c);
      // c divides the gcd and the gcd divides both inputs.
      CHECK(divide_exact(d, c).has_value());
      CHECK(divide_exact(a * c, d).has_value());
      CHECK(divide_exact(b * c, d).has_value());
      ++checked;
    }
    CHECK(checked > 50);
    CHECK(gcd(P("x1^2 - u1^2"), P("x1^2 + 2*x1*u1 + u1^2")) == P("x1 + u1"));
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  }

  TEST_CASE("square-free part") {
    CHECK(square_free_part(P("u1^2")) == P("u1"));
    CHECK(square_free_part(P("(u1 - u3)^3*(u2 + 1)")).normalized() == P("(u1 - u3)*(u2 + 1)").normalized());
    CHECK(square_free_part(P("u3^2 + u2^2")) == P("u3^2 + u2^2"));
  }

  TEST_CASE("monomial content and derivative") {
    CHECK(monomial_content(P("u1^2*x1 + u1*x1^3")) == Term(Term::Storage{{Variable::free(1), 1}, {Variable::dependent(1), 1}}));
    CHECK(derivative(P("u1*x1^3 + x1 + 5"), Variable::dependent(1)) == P("3*u1*x1^2 + 1"));
  }
}
