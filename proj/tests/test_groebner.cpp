#include <doctest.h>

#include "geoprove/errors.hpp"
#include "support.hpp"

using namespace geoprove;
using geoprove::test::load;
using geoprove::test::P;
using geoprove::test::PolyGen;

namespace {

AlgebraicSystem system_of(const ConstructionProtocol& p) { return algebrize(p, assign_coordinates(p)); }

// Every generator reduces to zero modulo the basis and every basis element
// reduces to zero modulo the generators' basis computed the other way round.
bool same_ideal(const std::vector<Polynomial>& gens, const GroebnerBasis& g) {
  for (const auto& f : gens) {
    if (!reduce(f, g.polys, g.order).is_zero()) return false;
  }
  const auto back = buchberger(g.polys, g.order);
  return back.polys == g.polys;
}

}  // namespace

TEST_SUITE("groebner") {
  const auto lex = MonomialOrder::lex();

  TEST_CASE("reduce examples") {
    CHECK(reduce(P("x1^2"), {P("x1")}, lex).is_zero());
    CHECK(reduce(P("x1 - u1"), {P("x1^2 - 1"), P("x1*u1 - 1")}, lex) == P("x1 - u1"));
    CHECK(reduce(Polynomial(), {P("x1")}, lex).is_zero());
  }

  TEST_CASE("S-polynomial examples") {
    CHECK(s_polynomial(P("x1^2 - 1"), P("x1*u1 - 1"), lex).normalized() == P("x1 - u1"));
    CHECK(s_polynomial(P("x1^2 + u1"), P("x1^2 + u1"), lex).is_zero());
    const Polynomial a = P("x1 + u2"), b = P("u1 + 3");
    CHECK(reduce(s_polynomial(a, b, lex), {a, b}, lex).is_zero());
  }

  TEST_CASE("small bases") {
    CHECK(buchberger({P("x1")}, lex).polys == std::vector<Polynomial>{P("x1")});
    const auto g = buchberger({P("x1^2 - 1"), P("x1*u1 - 1")}, lex);
    CHECK(g.polys == std::vector<Polynomial>{P("x1 - u1"), P("u1^2 - 1")});
    CHECK(buchberger({P("x1 - 1"), P("x1 - 2")}, lex).is_unit());
    CHECK(buchberger({}, lex).polys.empty());
  }

  TEST_CASE("post-hoc check rejects non-bases") {
    const std::vector<Polynomial> gens{P("x1^2 - 1"), P("x1*u1 - 1")};
    CHECK_FALSE(is_groebner_basis(gens, lex));
    CHECK_FALSE(is_groebner_basis(gens, lex, {}, true));
    CHECK(is_groebner_basis(buchberger(gens, lex).polys, lex));
    CHECK(is_groebner_basis({}, lex));
  }

  TEST_CASE("monomial orders") {
    const auto drl = MonomialOrder::degrevlex();
    const Term a = P("u1^3").leading().term, b = P("x1").leading().term;
    CHECK(lex.compare(b, a) == std::strong_ordering::greater);
    CHECK(drl.compare(a, b) == std::strong_ordering::greater);
    CHECK(leading_monomial(P("x1 + u1^3"), drl).term == a);
    CHECK(leading_monomial(P("x1 + u1^3"), lex).term == b);
  }

  TEST_CASE("random ideals: S-polynomials reduce, ideal kept, deterministic") {
    PolyGen g(41);
    int done = 0;
    for (int i = 0; i < 40; ++i) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(g.poly(3, 2, 5));
      for (const auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
        GroebnerBasis basis;
        try {
          basis = buchberger(gens, order, Budget(std::chrono::seconds(5)));
        } catch (const TimeoutError&) {
          continue;
        }
        CHECK(is_groebner_basis(basis.polys, order, {}, true));
        CHECK(is_groebner_basis(basis.polys, order));
        // Criteria only skip pairs; the verdict on raw generators must agree.
        CHECK(is_groebner_basis(gens, order) == is_groebner_basis(gens, order, {}, true));
        CHECK(same_ideal(gens, basis));
        std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
        CHECK(buchberger(shuffled, order).polys == basis.polys);
        ++done;
      }
    }
    CHECK(done > 40);
  }

  TEST_CASE("corpus bases are Groebner bases") {
    // Plain construction ideals; a few (circle-heavy ones) exceed the
    // budget and are skipped, as are checks of the largest bases.
    int produced = 0;
    int checked = 0;
    for (const auto& f : geoprove::test::corpus_files()) {
      CAPTURE(f);
      const auto sys = system_of(parse_protocol(read_text_file(f)));
      GroebnerBasis g;
      try {
        g = buchberger(sys.construction_polys, MonomialOrder::degrevlex(), Budget(std::chrono::seconds(5)));
      } catch (const TimeoutError&) {
        continue;
      }
      ++produced;
      CHECK(same_ideal(sys.construction_polys, g));
      try {
        const bool ok = is_groebner_basis(g.polys, g.order, Budget(std::chrono::seconds(10)));
        CHECK(ok);
        ++checked;
      } catch (const TimeoutError&) {
      }
    }
    CHECK(produced >= 10);
    CHECK(checked >= 8);
  }

  TEST_CASE("orthocenter basis agrees with radical membership") {
    const auto sys = system_of(load("worked/orthocenter.gp"));
    const auto g = buchberger(sys.construction_polys, lex);
    CHECK(is_groebner_basis(g.polys, lex, {}, true));
    // The goal lies in the ideal only after multiplying by the Wu initials.
    const Polynomial goal = sys.statement_polys.at(0);
    CHECK_FALSE(reduce(goal, g.polys, lex).is_zero());
    CHECK(reduce(goal * P("u1*u2"), g.polys, lex).is_zero());
    CHECK(radical_membership(goal, sys.construction_polys, {}, {P("u1"), P("u2"), P("u3 - u1")}));
  }

  TEST_CASE("radical membership examples") {
    CHECK(radical_membership(P("x1"), {P("x1^2")}));
    CHECK_FALSE(radical_membership(Polynomial(1), {P("x1")}));
    const auto sys = system_of(load("worked/midsegment.gp"));
    CHECK(radical_membership(sys.statement_polys.at(0), sys.construction_polys));
  }

  TEST_CASE("prove_groebner verdicts") {
    const auto ortho = system_of(load("worked/orthocenter.gp"));
    CHECK(prove_groebner(ortho, NdgMode::Wu).verdict == Verdict::Proved);
    const auto mid = system_of(load("worked/midsegment.gp"));
    CHECK(prove_groebner(mid, NdgMode::None).verdict == Verdict::Proved);
    AlgebraicSystem one;
    one.statement_polys = {Polynomial(1)};
    CHECK(prove_groebner(one, NdgMode::None).verdict == Verdict::NotProved);
    AlgebraicSystem bad;
    bad.construction_polys = {P("x1 - 1"), P("x1 - 2")};
    bad.construction_sources = {"P", "Q"};
    bad.statement_polys = {P("x1")};
    // A unit ideal contains everything; only triangulation flags it.
    CHECK(prove_groebner(bad, NdgMode::None).verdict == Verdict::Proved);
    CHECK(prove_groebner(bad, NdgMode::Wu).verdict == Verdict::Inconsistent);
  }

  TEST_CASE("Wu proved implies Groebner proved with Wu's NDGs") {
    for (const auto& f : geoprove::test::corpus_files()) {
      CAPTURE(f);
      const auto sys = system_of(parse_protocol(read_text_file(f)));
      const auto wu = prove_wu(sys);
      REQUIRE(wu.verdict == Verdict::Proved);
      const auto gb = prove_groebner(sys, NdgMode::Wu, Budget(std::chrono::seconds(120)),
                                     MonomialOrder::degrevlex(), &wu.ndgs);
      CHECK(gb.verdict == Verdict::Proved);
    }
  }
}
