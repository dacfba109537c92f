#include <doctest.h>

#include "geoprove/errors.hpp"
#include "support.hpp"

using namespace geoprove;

namespace {

const char* kMidsegment =
    "point A free\n"
    "point B free\n"
    "point C free\n"
    "point B1 midpoint A C\n"
    "point C1 midpoint A B\n"
    "prove parallel (line B1 C1) (line B C)\n";

ProtocolError parse_error(const std::string& text) {
  try {
    parse_protocol(text);
  } catch (const ProtocolError& e) {
    return e;
  }
  FAIL("no error for: " << text);
  throw;
}

}  // namespace

TEST_SUITE("protocol") {
  TEST_CASE("midsegment") {
    const auto p = parse_protocol(kMidsegment);
    REQUIRE(p.steps.size() == 5);
    CHECK(p.steps[3].kind == StepKind::Midpoint);
    CHECK(p.steps[3].points == std::vector<Label>{"A", "C"});
    CHECK(p.goal.kind == StatementKind::Parallel);
    CHECK(p.goal.lines[0] == LineExpr::through("B1", "C1"));
    CHECK(validate(p).empty());
  }

  TEST_CASE("smallest protocol") {
    const auto p = parse_protocol("point A free\nprove identical A A\n");
    CHECK(p.steps.size() == 1);
    CHECK(p.goal.kind == StatementKind::Identical);
  }

  TEST_CASE("undefined label") {
    const auto e = parse_error("point A free\npoint B midpoint A Z\nprove identical A B\n");
    CHECK(e.kind() == ProtocolError::Kind::UndefinedLabel);
    CHECK(e.detail() == "Z");
    CHECK(e.line() == 2);
    CHECK(e.column() == 20);
  }

  TEST_CASE("duplicate label") {
    const auto e = parse_error("point A free\npoint A free\nprove identical A A\n");
    CHECK(e.kind() == ProtocolError::Kind::DuplicateLabel);
    CHECK(e.line() == 2);
  }

  TEST_CASE("syntax errors carry position and expectation") {
    const auto e = parse_error("point A free\npoint B midpiont A A\nprove identical A B\n");
    CHECK(e.kind() == ProtocolError::Kind::Syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
    CHECK(parse_error("point A free\n").kind() == ProtocolError::Kind::Syntax);
    CHECK(parse_error("point A free\nprove collinear A A\n").kind() == ProtocolError::Kind::Syntax);
    CHECK(parse_error("point A free\nprove identical A A\nprove identical A A\n").kind() ==
          ProtocolError::Kind::Syntax);
    CHECK(parse_error("point A free\nprove parallel (line A A (line A A)\n").kind() == ProtocolError::Kind::Syntax);
  }

  TEST_CASE("unused point warning") {
    auto p = parse_protocol("point A free\npoint B free\npoint D free\nprove identical A B\n");
    const auto w = validate(p);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == Warning{Warning::Kind::UnusedPoint, "D"});
  }

  TEST_CASE("directives") {
    const auto p = geoprove::test::load("worked/orthocenter.gp");
    CHECK(p.name == "Orthocenter");
    REQUIRE(p.pin.has_value());
    CHECK(*p.pin == PinChoice{"A", "B", PinAxis::Y});
    CHECK(validate(p).empty());
  }

  TEST_CASE("every construction and statement form round-trips") {
    const char* text =
        "#@name Everything\n"
        "#@pin O A\n"
        "point O free\n"
        "point A free\n"
        "point B free\n"
        "point M midpoint A B\n"
        "point P on (perp M (line A B))\n"
        "point Q on (parallel O (line A B))\n"
        "point F foot P (line O A)\n"
        "point I intersect (line A P) (line B Q)\n"
        "point C oncircle (circle O A)\n"
        "point D oncircle (circle3 A B P)\n"
        "point E intersect2 (line A C) (circle O A) A\n"
        "prove congruent O A O E\n";
    const auto p = parse_protocol(text);
    const auto again = parse_protocol(to_text(p));
    CHECK(again == p);
    CHECK(to_text(again) == to_text(p));
  }

  TEST_CASE("corpus files round-trip") {
    for (const auto& f : geoprove::test::corpus_files()) {
      CAPTURE(f);
      const auto p = parse_protocol(read_text_file(f));
      CHECK(parse_protocol(to_text(p)) == p);
      CHECK(validate(p).empty());
    }
  }

  TEST_CASE("reference counts") {
    const auto counts = reference_counts(parse_protocol(kMidsegment));
    CHECK(counts.at("A") == 2);
    CHECK(counts.at("B") == 2);
    CHECK(counts.at("B1") == 1);
  }
}
