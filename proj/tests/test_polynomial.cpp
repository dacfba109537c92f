#include <doctest.h>

#include "geoprove/errors.hpp"
#include "geoprove/kernels.hpp"
#include "support.hpp"

using namespace geoprove;
using geoprove::test::P;
using geoprove::test::PolyGen;

namespace {

// Strictly descending, nonzero, merged: the canonical-form invariant.
bool canonical(const Polynomial& p) {
  const auto ms = p.monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].coeff == 0) return false;
    if (i > 0 && !(ms[i - 1].term > ms[i].term)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("addition examples") {
    CHECK(P("x1 + u1") + P("-u1") == P("x1"));
    CHECK(P("3*x1*u2 - 7") + Polynomial() == P("3*x1*u2 - 7"));
    CHECK(P("2*x1 - u1") + P("2*x1 - u1") == P("4*x1 - 2*u1"));
  }

  TEST_CASE("multiplication examples") {
    CHECK(P("x1 - u1") * P("x1 + u1") == P("x1^2 - u1^2"));
    CHECK(P("u2*x1 + 5") * Polynomial(1) == P("u2*x1 + 5"));
    CHECK(P("(u3 - u1)*x2") == P("u3*x2 - u1*x2"));
  }

  TEST_CASE("degree and leading coefficient") {
    const Variable x1 = Variable::dependent(1), x2 = Variable::dependent(2);
    CHECK(P("u2*x1^2 - u2*u1*x1").degree_in(x1) == 2);
    CHECK(P("u1").degree_in(x1) == 0);
    CHECK(Polynomial().degree_in(x1) == 0);
    CHECK(P("(u3 - u1)*x2 + u2*x1").leading_coeff(x2) == P("u3 - u1"));
    CHECK(P("-u2*u1*x1 - u3^2*u1 + u3*u1^2").leading_coeff(x1) == P("-u2*u1"));
    CHECK(P("u5").leading_coeff(x1) == P("u5"));
  }

  TEST_CASE("evaluate examples") {
    Assignment a{{Variable::dependent(1), Rational(1, 2)}, {Variable::free(1), Rational(1)}};
    CHECK(evaluate(P("2*x1 - u1"), a) == 0);
    CHECK(evaluate(Polynomial(), {}) == 0);
    // Midsegment instance A(0,0) B(2,0) C(0,2) with B1(0,1) C1(1,0), unpinned numbering.
    Assignment m{{Variable::free(0), 0}, {Variable::free(1), 0}, {Variable::free(2), 2}, {Variable::free(3), 0},
                 {Variable::free(4), 0}, {Variable::free(5), 2}, {Variable::dependent(0), 0},
                 {Variable::dependent(1), 1}, {Variable::dependent(2), 1}, {Variable::dependent(3), 0}};
    CHECK(evaluate(P("(x2 - x0)*(u5 - u3) - (x3 - x1)*(u4 - u2)"), m) == 0);
    CHECK_THROWS_AS(evaluate(P("x1 + u9"), a), MissingVariableError);
  }

  TEST_CASE("ring axioms on random polynomials") {
    PolyGen g(11);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const Polynomial a = g.poly(), b = g.poly(), c = g.poly();
      const Polynomial zero, one(1);
      bool ok = (a + b) == (b + a) && (a * b) == (b * a);
      ok = ok && ((a + b) + c) == (a + (b + c)) && ((a * b) * c) == (a * (b * c));
      ok = ok && (a * (b + c)) == (a * b + a * c);
      ok = ok && (a + zero) == a && (a * one) == a && (a - a).is_zero() && (a * zero).is_zero();
      ok = ok && (a + (-a)).is_zero();
      ok = ok && canonical(a * b) && canonical(a + b) && canonical(a - c);
      if (!ok) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    PolyGen g(12);
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
      const Polynomial a = g.poly(), b = g.poly();
      const Assignment pt = g.point();
      const Rational ea = evaluate(a, pt), eb = evaluate(b, pt);
      if (evaluate(a * b, pt) != ea * eb || evaluate(a + b, pt) != ea + eb || evaluate(a - b, pt) != ea - eb) {
        ++failures;
      }
    }
    CHECK(failures == 0);
  }

  TEST_CASE("construction order does not matter") {
    PolyGen g(13);
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = g.poly();
      std::vector<Polynomial::Monomial> ms(a.monomials().begin(), a.monomials().end());
      std::reverse(ms.begin(), ms.end());
      // Split each coefficient in two so merging is exercised.
      std::vector<Polynomial::Monomial> split;
      for (const auto& m : ms) {
        split.push_back({m.term, Integer(1)});
        split.push_back({m.term, m.coeff - 1});
      }
      CHECK(Polynomial::from_monomials(split) == a);
    }
  }

  TEST_CASE("render and parse round-trip") {
    PolyGen g(14);
    for (int i = 0; i < 500; ++i) {
      const Polynomial a = g.poly(6, 4, 1000);
      REQUIRE(parse_polynomial(a.to_string()) == a);
    }
    CHECK(P("-u2*u1*x1 - u3^2*u1 + u3*u1^2").to_string() == "-u2*u1*x1 - u3^2*u1 + u3*u1^2");
    CHECK(Polynomial().to_string() == "0");
    CHECK_THROWS_AS(parse_polynomial("x1 +"), AlgebraError);
    CHECK_THROWS_AS(parse_polynomial("x1 ** 2"), AlgebraError);
  }

  TEST_CASE("variables and classes") {
    CHECK(Variable::free(7) < Variable::dependent(1));
    CHECK(Variable::dependent(7) < Variable::auxiliary(1));
    CHECK(parse_variable("x12") == Variable::dependent(12));
    CHECK(Variable::auxiliary(3).name() == "z3");
    const auto vs = P("x2*u1 + u3").variables();
    REQUIRE(vs.size() == 3);
    CHECK(vs.front() == Variable::free(1));
    CHECK(vs.back() == Variable::dependent(2));
  }

  TEST_CASE("content and normalization") {
    CHECK(P("-6*x1 + 4*u1").content() == 2);
    CHECK(P("-6*x1 + 4*u1").normalized() == P("3*x1 - 2*u1"));
    CHECK(Polynomial().content() == 0);
  }

  TEST_CASE("large coefficients stay exact") {
    Polynomial p = P("123456789*x1 + 987654321");
    Polynomial q = p.pow(6);
    Assignment a{{Variable::dependent(1), Rational(3, 7)}};
    Rational v = evaluate(p, a);
    Rational expect = v * v * v * v * v * v;
    CHECK(evaluate(q, a) == expect);
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("chunked product matches the serial reference") {
    PolyGen g(21);
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = g.poly(12), b = g.poly(12);
      const Polynomial ref = kernels::multiply_reference(a, b);
      CHECK(kernels::multiply_chunked(a, b, false) == ref);
      CHECK(kernels::multiply_chunked(a, b, true) == ref);
      CHECK(a * b == ref);
    }
  }

  TEST_CASE("large products above the parallel threshold") {
    PolyGen g(22);
    Polynomial a, b;
    while (a.size() * b.size() < 2 * kernels::kParallelMultiplyThreshold) {
      a += g.poly(40, 6);
      b += g.poly(40, 6);
    }
    const Polynomial ref = kernels::multiply_reference(a, b);
    CHECK(kernels::multiply(a, b) == ref);
    CHECK(kernels::multiply_chunked(a, b, true) == ref);
  }
}
