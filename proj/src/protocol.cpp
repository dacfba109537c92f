#include "geoprove/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "geoprove/errors.hpp"

namespace geoprove {

ProtocolError::ProtocolError(Kind kind, int line, int column, std::string detail)
    : Error([&] {
        std::ostringstream os;
        os << "line " << line << ", column " << column << ": ";
        switch (kind) {
          case Kind::Syntax: os << "syntax error, expected " << detail; break;
          case Kind::UndefinedLabel: os << "undefined label '" << detail << "'"; break;
          case Kind::DuplicateLabel: os << "duplicate label '" << detail << "'"; break;
        }
        return os.str();
      }()),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(detail)) {}

// ------------------------------------------------------------------ AST

LineExpr LineExpr::through(Label a, Label b) {
  LineExpr l;
  l.kind = Kind::Through;
  l.points = {std::move(a), std::move(b)};
  return l;
}

LineExpr LineExpr::perp(Label p, LineExpr base) {
  LineExpr l;
  l.kind = Kind::Perp;
  l.points = {std::move(p)};
  l.base = std::make_shared<const LineExpr>(std::move(base));
  return l;
}

LineExpr LineExpr::parallel(Label p, LineExpr base) {
  LineExpr l;
  l.kind = Kind::Parallel;
  l.points = {std::move(p)};
  l.base = std::make_shared<const LineExpr>(std::move(base));
  return l;
}

bool LineExpr::operator==(const LineExpr& o) const {
  if (kind != o.kind || points != o.points) return false;
  if (!base || !o.base) return !base && !o.base;
  return *base == *o.base;
}

bool ConstructionStep::operator==(const ConstructionStep& o) const {
  return label == o.label && kind == o.kind && points == o.points && lines == o.lines && circle == o.circle;
}

bool Statement::operator==(const Statement& o) const {
  return kind == o.kind && points == o.points && lines == o.lines && circle == o.circle;
}

bool ConstructionProtocol::operator==(const ConstructionProtocol& o) const {
  return name == o.name && steps == o.steps && goal == o.goal && pin == o.pin;
}

const ConstructionStep* ConstructionProtocol::find(std::string_view label) const {
  for (const auto& s : steps) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

int ConstructionProtocol::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

std::string_view step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::FreePoint: return "free";
    case StepKind::Midpoint: return "midpoint";
    case StepKind::IntersectLines: return "intersect";
    case StepKind::FootOfPerpendicular: return "foot";
    case StepKind::PointOnLine: return "on";
    case StepKind::PointOnCircle: return "oncircle";
    case StepKind::SecondIntersectLineCircle: return "intersect2";
  }
  return "?";
}

std::string_view statement_kind_name(StatementKind k) {
  switch (k) {
    case StatementKind::Collinear: return "collinear";
    case StatementKind::Parallel: return "parallel";
    case StatementKind::Perpendicular: return "perpendicular";
    case StatementKind::Incident: return "incident";
    case StatementKind::IncidentCircle: return "oncircle";
    case StatementKind::CongruentSegments: return "congruent";
    case StatementKind::Identical: return "identical";
  }
  return "?";
}

// --------------------------------------------------------------- parser

namespace {

struct Token {
  std::string text;
  int column = 0;
};

bool is_label(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), static_cast<int>(i) + 1});
      ++i;
    } else {
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '(' &&
             line[j] != ')') {
        ++j;
      }
      out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no, int line_len, const std::set<Label>& declared)
      : tokens_(std::move(tokens)), line_(line_no), end_col_(line_len + 1), declared_(declared) {}

  bool at_end() const { return pos_ >= tokens_.size(); }
  int column() const { return at_end() ? end_col_ : tokens_[pos_].column; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ProtocolError(ProtocolError::Kind::Syntax, line_, column(), expected);
  }

  std::string keyword(std::initializer_list<std::string_view> options, const std::string& expected) {
    if (at_end()) fail(expected);
    const std::string& t = tokens_[pos_].text;
    for (auto o : options) {
      if (t == o) {
        ++pos_;
        return t;
      }
    }
    fail(expected);
  }

  void expect(std::string_view tok) {
    if (at_end() || tokens_[pos_].text != tok) fail("'" + std::string(tok) + "'");
    ++pos_;
  }

  bool peek_is(std::string_view tok) const { return !at_end() && tokens_[pos_].text == tok; }

  /// A label that must already be declared.
  Label ref() {
    if (at_end() || !is_label(tokens_[pos_].text)) fail("a point label");
    const Token& t = tokens_[pos_++];
    if (!declared_.count(t.text)) {
      throw ProtocolError(ProtocolError::Kind::UndefinedLabel, line_, t.column, t.text);
    }
    return t.text;
  }

  /// A fresh label being declared.
  Label fresh() {
    if (at_end() || !is_label(tokens_[pos_].text)) fail("a point label");
    const Token& t = tokens_[pos_++];
    if (declared_.count(t.text)) {
      throw ProtocolError(ProtocolError::Kind::DuplicateLabel, line_, t.column, t.text);
    }
    return t.text;
  }

  LineExpr line_expr() {
    expect("(");
    const std::string kw = keyword({"line", "perp", "parallel"}, "'line', 'perp' or 'parallel'");
    LineExpr out;
    if (kw == "line") {
      const int col = column();
      Label a = ref();
      Label b = ref();
      if (a == b) throw ProtocolError(ProtocolError::Kind::Syntax, line_, col, "two distinct points");
      out = LineExpr::through(std::move(a), std::move(b));
    } else {
      Label p = ref();
      LineExpr base = line_expr();
      out = kw == "perp" ? LineExpr::perp(std::move(p), std::move(base))
                         : LineExpr::parallel(std::move(p), std::move(base));
    }
    expect(")");
    return out;
  }

  CircleExpr circle_expr() {
    expect("(");
    const std::string kw = keyword({"circle", "circle3"}, "'circle' or 'circle3'");
    CircleExpr c;
    const int col = column();
    if (kw == "circle") {
      c.kind = CircleExpr::Kind::CenterThrough;
      c.points = {ref(), ref()};
    } else {
      c.kind = CircleExpr::Kind::ThroughThree;
      c.points = {ref(), ref(), ref()};
    }
    std::set<Label> distinct(c.points.begin(), c.points.end());
    if (distinct.size() != c.points.size()) {
      throw ProtocolError(ProtocolError::Kind::Syntax, line_, col, "distinct points");
    }
    expect(")");
    return c;
  }

  void finish() {
    if (!at_end()) fail("end of line");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
  int end_col_;
  const std::set<Label>& declared_;
};

ConstructionStep parse_step(LineParser& lp) {
  ConstructionStep step;
  step.pos = {lp.line(), lp.column()};
  lp.expect("point");
  step.label = lp.fresh();
  const std::string kw = lp.keyword({"free", "midpoint", "intersect", "foot", "on", "oncircle", "intersect2"},
                                    "a construction ('free', 'midpoint', 'intersect', 'foot', 'on', "
                                    "'oncircle' or 'intersect2')");
  if (kw == "free") {
    step.kind = StepKind::FreePoint;
  } else if (kw == "midpoint") {
    step.kind = StepKind::Midpoint;
    const int col = lp.column();
    step.points = {lp.ref(), lp.ref()};
    if (step.points[0] == step.points[1]) {
      throw ProtocolError(ProtocolError::Kind::Syntax, lp.line(), col, "two distinct points");
    }
  } else if (kw == "intersect") {
    step.kind = StepKind::IntersectLines;
    step.lines.push_back(lp.line_expr());
    step.lines.push_back(lp.line_expr());
  } else if (kw == "foot") {
    step.kind = StepKind::FootOfPerpendicular;
    step.points = {lp.ref()};
    step.lines.push_back(lp.line_expr());
  } else if (kw == "on") {
    step.kind = StepKind::PointOnLine;
    step.lines.push_back(lp.line_expr());
  } else if (kw == "oncircle") {
    step.kind = StepKind::PointOnCircle;
    step.circle = lp.circle_expr();
  } else {
    step.kind = StepKind::SecondIntersectLineCircle;
    step.lines.push_back(lp.line_expr());
    step.circle = lp.circle_expr();
    step.points = {lp.ref()};
  }
  lp.finish();
  return step;
}

Statement parse_goal(LineParser& lp) {
  Statement st;
  st.pos = {lp.line(), lp.column()};
  lp.expect("prove");
  const std::string kw =
      lp.keyword({"collinear", "parallel", "perpendicular", "incident", "oncircle", "congruent", "identical"},
                 "a statement ('collinear', 'parallel', 'perpendicular', 'incident', 'oncircle', "
                 "'congruent' or 'identical')");
  if (kw == "collinear") {
    st.kind = StatementKind::Collinear;
    st.points = {lp.ref(), lp.ref(), lp.ref()};
  } else if (kw == "parallel" || kw == "perpendicular") {
    st.kind = kw == "parallel" ? StatementKind::Parallel : StatementKind::Perpendicular;
    st.lines.push_back(lp.line_expr());
    st.lines.push_back(lp.line_expr());
  } else if (kw == "incident") {
    st.kind = StatementKind::Incident;
    st.points = {lp.ref()};
    st.lines.push_back(lp.line_expr());
  } else if (kw == "oncircle") {
    st.kind = StatementKind::IncidentCircle;
    st.points = {lp.ref()};
    st.circle = lp.circle_expr();
  } else if (kw == "congruent") {
    st.kind = StatementKind::CongruentSegments;
    st.points = {lp.ref(), lp.ref(), lp.ref(), lp.ref()};
  } else {
    st.kind = StatementKind::Identical;
    st.points = {lp.ref(), lp.ref()};
  }
  lp.finish();
  return st;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ConstructionProtocol parse_protocol(std::string_view text) {
  ConstructionProtocol proto;
  std::set<Label> declared;
  bool have_goal = false;
  struct PendingPin {
    PinChoice pin;
    int line;
  };
  std::optional<PendingPin> pending_pin;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const int indent = static_cast<int>(raw.find_first_not_of(" \t"));
    if (line.front() == '#') {
      if (line.rfind("#@", 0) != 0) continue;
      std::vector<Token> toks = tokenize(line.substr(2));
      if (toks.empty()) continue;
      if (toks[0].text == "name") {
        proto.name = std::string(trim(line.substr(2 + 4)));
      } else if (toks[0].text == "pin") {
        const int col = indent + 3 + (toks.size() > 1 ? toks[1].column - 1 : 0);
        if (toks.size() < 3 || toks.size() > 4 || !is_label(toks[1].text) || !is_label(toks[2].text) ||
            toks[1].text == toks[2].text) {
          throw ProtocolError(ProtocolError::Kind::Syntax, line_no, col, "'#@pin <label> <label> [x|y]'");
        }
        PinChoice pin{toks[1].text, toks[2].text, PinAxis::X};
        if (toks.size() == 4) {
          if (toks[3].text == "y") {
            pin.axis = PinAxis::Y;
          } else if (toks[3].text != "x") {
            throw ProtocolError(ProtocolError::Kind::Syntax, line_no, indent + 2 + toks[3].column, "'x' or 'y'");
          }
        }
        pending_pin = PendingPin{pin, line_no};
      }
      continue;
    }

    std::vector<Token> toks = tokenize(raw);
    LineParser lp(std::move(toks), line_no, static_cast<int>(raw.size()), declared);
    if (have_goal) lp.fail("end of input after the goal");
    if (lp.peek_is("point")) {
      ConstructionStep step = parse_step(lp);
      declared.insert(step.label);
      proto.steps.push_back(std::move(step));
    } else if (lp.peek_is("prove")) {
      proto.goal = parse_goal(lp);
      have_goal = true;
    } else {
      lp.fail("'point' or 'prove'");
    }
  }

  if (!have_goal) {
    throw ProtocolError(ProtocolError::Kind::Syntax, line_no + 1, 1, "a 'prove' goal");
  }
  if (std::none_of(proto.steps.begin(), proto.steps.end(), [](const auto& s) { return s.is_free(); })) {
    throw ProtocolError(ProtocolError::Kind::Syntax, 1, 1, "at least one free point");
  }
  if (pending_pin) {
    for (const Label* l : {&pending_pin->pin.origin, &pending_pin->pin.second}) {
      const ConstructionStep* s = proto.find(*l);
      if (!s) throw ProtocolError(ProtocolError::Kind::UndefinedLabel, pending_pin->line, 1, *l);
      if (!s->is_free()) {
        throw ProtocolError(ProtocolError::Kind::Syntax, pending_pin->line, 1, "a free point to pin, got " + *l);
      }
    }
    proto.pin = pending_pin->pin;
  }
  return proto;
}

// -------------------------------------------------------------- printing

std::string to_text(const LineExpr& l) {
  switch (l.kind) {
    case LineExpr::Kind::Through: return "(line " + l.points[0] + " " + l.points[1] + ")";
    case LineExpr::Kind::Perp: return "(perp " + l.points[0] + " " + to_text(*l.base) + ")";
    case LineExpr::Kind::Parallel: return "(parallel " + l.points[0] + " " + to_text(*l.base) + ")";
  }
  return "";
}

std::string to_text(const CircleExpr& c) {
  std::string out = c.kind == CircleExpr::Kind::CenterThrough ? "(circle" : "(circle3";
  for (const auto& p : c.points) out += " " + p;
  return out + ")";
}

std::string to_text(const ConstructionStep& s) {
  std::string out = "point " + s.label + " " + std::string(step_kind_name(s.kind));
  switch (s.kind) {
    case StepKind::FreePoint: break;
    case StepKind::Midpoint: out += " " + s.points[0] + " " + s.points[1]; break;
    case StepKind::IntersectLines: out += " " + to_text(s.lines[0]) + " " + to_text(s.lines[1]); break;
    case StepKind::FootOfPerpendicular: out += " " + s.points[0] + " " + to_text(s.lines[0]); break;
    case StepKind::PointOnLine: out += " " + to_text(s.lines[0]); break;
    case StepKind::PointOnCircle: out += " " + to_text(*s.circle); break;
    case StepKind::SecondIntersectLineCircle:
      out += " " + to_text(s.lines[0]) + " " + to_text(*s.circle) + " " + s.points[0];
      break;
  }
  return out;
}

std::string to_text(const Statement& s) {
  std::string out = "prove " + std::string(statement_kind_name(s.kind));
  switch (s.kind) {
    case StatementKind::Collinear:
    case StatementKind::CongruentSegments:
    case StatementKind::Identical:
      for (const auto& p : s.points) out += " " + p;
      break;
    case StatementKind::Parallel:
    case StatementKind::Perpendicular: out += " " + to_text(s.lines[0]) + " " + to_text(s.lines[1]); break;
    case StatementKind::Incident: out += " " + s.points[0] + " " + to_text(s.lines[0]); break;
    case StatementKind::IncidentCircle: out += " " + s.points[0] + " " + to_text(*s.circle); break;
  }
  return out;
}

std::string to_text(const ConstructionProtocol& p) {
  std::string out;
  if (!p.name.empty()) out += "#@name " + p.name + "\n";
  if (p.pin) {
    out += "#@pin " + p.pin->origin + " " + p.pin->second + (p.pin->axis == PinAxis::Y ? " y" : " x") + "\n";
  }
  for (const auto& s : p.steps) out += to_text(s) + "\n";
  out += to_text(p.goal) + "\n";
  return out;
}

// ------------------------------------------------------------ validation

void collect_labels(const LineExpr& l, std::vector<Label>& out) {
  out.insert(out.end(), l.points.begin(), l.points.end());
  if (l.base) collect_labels(*l.base, out);
}

namespace {

template <typename Node>
std::vector<Label> labels_of(const Node& n) {
  std::vector<Label> out(n.points.begin(), n.points.end());
  for (const auto& l : n.lines) collect_labels(l, out);
  if (n.circle) out.insert(out.end(), n.circle->points.begin(), n.circle->points.end());
  return out;
}

}  // namespace

std::vector<Label> referenced_labels(const ConstructionStep& s) { return labels_of(s); }
std::vector<Label> referenced_labels(const Statement& s) { return labels_of(s); }

std::map<Label, int> reference_counts(const ConstructionProtocol& p) {
  std::map<Label, int> counts;
  for (const auto& s : p.steps) counts[s.label];
  for (const auto& s : p.steps) {
    for (const auto& l : referenced_labels(s)) ++counts[l];
  }
  for (const auto& l : referenced_labels(p.goal)) ++counts[l];
  return counts;
}

std::string Warning::message() const {
  switch (kind) {
    case Kind::UnusedPoint: return "point " + label + " is never used";
  }
  return {};
}

std::vector<Warning> validate(const ConstructionProtocol& p) {
  std::vector<Warning> out;
  const auto counts = reference_counts(p);
  for (const auto& s : p.steps) {
    if (counts.at(s.label) == 0) out.push_back({Warning::Kind::UnusedPoint, s.label});
  }
  return out;
}

}  // namespace geoprove
