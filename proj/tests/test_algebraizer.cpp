#include <doctest.h>

#include "geoprove/numeric.hpp"
#include "support.hpp"

using namespace geoprove;
using geoprove::test::load;
using geoprove::test::P;

namespace {

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) { return a.normalized() == b.normalized(); }

bool contains_up_to_sign(const std::vector<Polynomial>& ps, const Polynomial& q) {
  return std::any_of(ps.begin(), ps.end(), [&](const Polynomial& p) { return same_up_to_sign(p, q); });
}

std::string coords(const CoordinateAssignment& a, const Label& l) {
  const auto& pc = a.at(l);
  return "(" + pc.x.to_string() + ", " + pc.y.to_string() + ")";
}

}  // namespace

TEST_SUITE("algebraizer") {
  TEST_CASE("midsegment pinned on B and C") {
    const auto p = load("worked/midsegment.gp");
    const auto a = assign_coordinates(p);
    CHECK(coords(a, "B") == "(0, 0)");
    CHECK(coords(a, "C") == "(u1, 0)");
    CHECK(coords(a, "A") == "(u2, u3)");
    CHECK(coords(a, "B1") == "(x1, x2)");
    CHECK(coords(a, "C1") == "(x3, x4)");
    const auto sys = algebrize(p, a);
    // Renumbered form of 2x0 = u0 + u4, 2x1 = u1, 2x2 = u0, 2x3 = u1.
    const std::vector<Polynomial> expect = {P("2*x1 - u2 - u1"), P("2*x2 - u3"), P("2*x3 - u2"), P("2*x4 - u3")};
    REQUIRE(sys.construction_polys.size() == expect.size());
    for (const auto& e : expect) CHECK(contains_up_to_sign(sys.construction_polys, e));
    REQUIRE(sys.statement_polys.size() == 1);
    CHECK(same_up_to_sign(sys.statement_polys[0], P("x4 - x2")));
    CHECK(sys.side_ndgs.empty());
  }

  TEST_CASE("midsegment without pinning") {
    const auto p = load("worked/midsegment.gp");
    AssignOptions o;
    o.pin_points = false;
    o.first_index = 0;
    const auto a = assign_coordinates(p, o);
    CHECK(coords(a, "A") == "(u0, u1)");
    CHECK(coords(a, "C") == "(u4, u5)");
    const auto sys = algebrize(p, a);
    for (const char* e : {"2*x0 - u0 - u4", "2*x1 - u1 - u5", "2*x2 - u0 - u2", "2*x3 - u1 - u3"}) {
      CHECK(contains_up_to_sign(sys.construction_polys, P(e)));
    }
    REQUIRE(sys.statement_polys.size() == 1);
    CHECK(same_up_to_sign(sys.statement_polys[0], P("(x2 - x0)*(u5 - u3) - (x3 - x1)*(u4 - u2)")));
  }

  TEST_CASE("single free point sits at the origin") {
    const auto p = parse_protocol("point A free\nprove identical A A\n");
    const auto a = assign_coordinates(p);
    CHECK(coords(a, "A") == "(0, 0)");
    const auto sys = algebrize(p, a);
    CHECK(sys.construction_polys.empty());
  }

  TEST_CASE("orthocenter coordinates on the x-axis") {
    const auto p = load("worked/orthocenter.gp");
    AssignOptions o;
    o.axis = PinAxis::X;
    const auto a = assign_coordinates(p, o);
    CHECK(coords(a, "A") == "(0, 0)");
    CHECK(coords(a, "B") == "(u1, 0)");
    CHECK(coords(a, "C") == "(u2, u3)");
    CHECK(coords(a, "H") == "(x1, x2)");
  }

  TEST_CASE("orthocenter system") {
    const auto p = load("worked/orthocenter.gp");
    const auto sys = algebrize(p, assign_coordinates(p));
    REQUIRE(sys.construction_polys.size() == 2);
    CHECK(contains_up_to_sign(sys.construction_polys, P("(u3 - u1)*x2 + u2*x1")));
    CHECK(contains_up_to_sign(sys.construction_polys, P("u3*x2 + u2*x1 - u3*u1")));
    REQUIRE(sys.statement_polys.size() == 1);
    CHECK(same_up_to_sign(sys.statement_polys[0], P("x2 - u3")));
  }

  TEST_CASE("Simson system") {
    const auto p = load("worked/simson.gp");
    const auto a = assign_coordinates(p);
    CHECK(coords(a, "D") == "(u4, x1)");
    CHECK(coords(a, "M") == "(0, x1)");
    CHECK(coords(a, "N") == "(x2, x3)");
    CHECK(coords(a, "P") == "(x4, x5)");
    const auto sys = algebrize(p, a);
    const std::vector<Polynomial> expect = {
        P("u2*x1^2 - u2*u1*x1 + (u4^2*u2 - u4*u3^2 + u4*u3*u1 - u4*u2^2)"),
        P("(u3 - u1)*x3 + u2*x2 + (-u3 + u1)*x1 - u4*u2"),
        P("u2*x3 + (-u3 + u1)*x2 - u2*u1"),
        P("u3*x5 + u2*x4 - u3*x1 - u4*u2"),
        P("u2*x5 - u3*x4"),
    };
    REQUIRE(sys.construction_polys.size() == 5);
    for (const auto& e : expect) CHECK(contains_up_to_sign(sys.construction_polys, e));
    REQUIRE(sys.statement_polys.size() == 1);
    CHECK(same_up_to_sign(sys.statement_polys[0], P("x5*x2 - x4*x3 + x4*x1 - x2*x1")));
  }

  TEST_CASE("Simson with a right angle at B") {
    const auto p = load("worked/simson_right.gp");
    const auto a = assign_coordinates(p);
    CHECK(coords(a, "C") == "(u2, u1)");
    CHECK(coords(a, "D") == "(u3, x1)");
    CHECK(coords(a, "N") == "(u3, u1)");
    CHECK(coords(a, "P") == "(x2, x3)");
    const auto sys = algebrize(p, a);
    REQUIRE(sys.construction_polys.size() == 3);
    for (const char* e : {"x1^2 - u1*x1 + (u3^2 - u3*u2)", "u1*x3 + u2*x2 - u1*x1 - u3*u2", "u2*x3 - u1*x2"}) {
      CHECK(contains_up_to_sign(sys.construction_polys, P(e)));
    }
    CHECK(same_up_to_sign(sys.statement_polys.at(0), P("u3*x3 + x2*x1 - u1*x2 - u3*x1")));
  }

  TEST_CASE("relation polynomials") {
    const auto p = load("worked/orthocenter.gp");
    const auto a = assign_coordinates(p);
    const auto pt = [&](const char* l) { return symbolic_point(l, a); };
    const auto ln = [&](const char* x, const char* y) { return symbolic_line(LineExpr::through(x, y), a); };
    CHECK(same_up_to_sign(relation::perpendicular(ln("A", "H"), ln("B", "C")), P("(u3 - u1)*x2 + u2*x1")));
    const auto id = relation::identical(pt("A"), pt("A"));
    REQUIRE(id.size() == 2);
    CHECK(id[0].is_zero());
    CHECK(id[1].is_zero());
    Statement mid;
    mid.kind = StatementKind::CongruentSegments;
    mid.points = {"A", "B", "A", "C"};
    CHECK(relation_polynomials(mid, a).at(0) == P("u1^2 - u2^2 - u3^2"));
  }

  TEST_CASE("statement forms are symmetric") {
    const auto p = load("worked/simson.gp");
    const auto a = assign_coordinates(p);
    const auto pt = [&](const char* l) { return symbolic_point(l, a); };
    const auto ln = [&](const char* x, const char* y) { return symbolic_line(LineExpr::through(x, y), a); };
    const Polynomial c = relation::collinear(pt("M"), pt("N"), pt("P"));
    CHECK(same_up_to_sign(c, relation::collinear(pt("N"), pt("M"), pt("P"))));
    CHECK(same_up_to_sign(c, relation::collinear(pt("P"), pt("N"), pt("M"))));
    CHECK(same_up_to_sign(relation::parallel(ln("A", "D"), ln("B", "C")),
                          relation::parallel(ln("C", "B"), ln("A", "D"))));
    CHECK(same_up_to_sign(relation::perpendicular(ln("A", "D"), ln("B", "C")),
                          relation::perpendicular(ln("B", "C"), ln("D", "A"))));
    CHECK(same_up_to_sign(relation::concyclic(pt("D"), pt("A"), pt("B"), pt("C")),
                          relation::concyclic(pt("A"), pt("B"), pt("C"), pt("D"))));
    CHECK(same_up_to_sign(relation::congruent(pt("A"), pt("B"), pt("C"), pt("D")),
                          relation::congruent(pt("D"), pt("C"), pt("B"), pt("A"))));
  }

  TEST_CASE("pin heuristic follows reference counts") {
    const auto p = parse_protocol(
        "point A free\npoint B free\npoint C free\n"
        "point H intersect (perp A (line B C)) (perp B (line A C))\n"
        "prove perpendicular (line C H) (line A B)\n");
    const auto pin = choose_pins(p);
    REQUIRE(pin.has_value());
    CHECK(pin->origin != pin->second);
  }

  TEST_CASE("construction polynomials vanish on sampled instances") {
    for (const auto& f : geoprove::test::corpus_files()) {
      CAPTURE(f);
      const auto p = parse_protocol(read_text_file(f));
      const auto a = assign_coordinates(p);
      const auto sys = algebrize(p, a);
      InstanceSampler sampler(7);
      int accepted = 0, construction_failures = 0, statement_failures = 0;
      for (int i = 0; i < 400 && accepted < 25; ++i) {
        const auto inst = sampler.sample(p, a);
        if (!inst) continue;
        ++accepted;
        for (const auto& c : sys.construction_polys) {
          if (evaluate(c, inst->values) != 0) ++construction_failures;
        }
        for (const auto& g : sys.statement_polys) {
          if (evaluate(g, inst->values) != 0) ++statement_failures;
        }
      }
      CHECK(accepted >= 10);
      CHECK(construction_failures == 0);
      // Every corpus theorem is true, so numeric instances satisfy the goal too.
      CHECK(statement_failures == 0);
    }
  }
}
