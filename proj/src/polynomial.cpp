#include "geoprove/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/kernels.hpp"

namespace geoprove {

// ---------------------------------------------------------------- Variable

std::string Variable::name() const {
  char prefix = 'u';
  switch (cls()) {
    case VarClass::Free: prefix = 'u'; break;
    case VarClass::Dependent: prefix = 'x'; break;
    case VarClass::Auxiliary: prefix = 'z'; break;
  }
  return prefix + std::to_string(index());
}

Variable parse_variable(std::string_view text) {
  if (text.size() < 2) throw AlgebraError("bad variable name '" + std::string(text) + "'");
  VarClass cls;
  switch (text[0]) {
    case 'u': cls = VarClass::Free; break;
    case 'x': cls = VarClass::Dependent; break;
    case 'z': cls = VarClass::Auxiliary; break;
    default: throw AlgebraError("bad variable name '" + std::string(text) + "'");
  }
  std::uint32_t index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
  if (ec != std::errc{} || ptr != text.data() + text.size() || index > 0xFFFFFFu) {
    throw AlgebraError("bad variable name '" + std::string(text) + "'");
  }
  return {cls, index};
}

// -------------------------------------------------------------------- Term

Term::Term(Storage powers) {
  std::sort(powers.begin(), powers.end(), [](const Power& a, const Power& b) { return a.var > b.var; });
  for (const Power& p : powers) {
    if (p.exp == 0) continue;
    if (!powers_.empty() && powers_.back().var == p.var) {
      powers_.back().exp += p.exp;
    } else {
      powers_.push_back(p);
    }
  }
}

Term Term::of(Variable v, std::uint32_t exp) {
  Term t;
  if (exp > 0) t.powers_.push_back({v, exp});
  return t;
}

std::uint32_t Term::degree_in(Variable v) const {
  for (const Power& p : powers_) {
    if (p.var == v) return p.exp;
    if (p.var < v) break;
  }
  return 0;
}

bool Term::divides(const Term& other) const {
  auto it = other.powers_.begin();
  for (const Power& p : powers_) {
    while (it != other.powers_.end() && it->var > p.var) ++it;
    if (it == other.powers_.end() || it->var != p.var || it->exp < p.exp) return false;
    ++it;
  }
  return true;
}

bool Term::coprime(const Term& other) const {
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() && b != other.powers_.end()) {
    if (a->var == b->var) return false;
    if (a->var > b->var) ++a; else ++b;
  }
  return true;
}

Term Term::quotient(const Term& divisor) const {
  Term out;
  auto d = divisor.powers_.begin();
  for (const Power& p : powers_) {
    if (d != divisor.powers_.end() && d->var == p.var) {
      if (p.exp > d->exp) out.powers_.push_back({p.var, p.exp - d->exp});
      ++d;
    } else {
      out.powers_.push_back(p);
    }
  }
  return out;
}

Term Term::lcm(const Term& other) const {
  Term out;
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->var > b->var)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->var > a->var) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.push_back({a->var, std::max(a->exp, b->exp)});
      ++a;
      ++b;
    }
  }
  return out;
}

Term Term::without(Variable v) const {
  Term out;
  for (const Power& p : powers_) {
    if (p.var != v) out.powers_.push_back(p);
  }
  return out;
}

Term Term::with_power(Variable v, std::uint32_t exp) const {
  Storage s(powers_.begin(), powers_.end());
  s.erase(std::remove_if(s.begin(), s.end(), [v](const Power& p) { return p.var == v; }), s.end());
  s.push_back({v, exp});
  return Term(std::move(s));
}

Term Term::operator*(const Term& other) const {
  Term out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->var > b->var)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->var > a->var) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  const std::size_t n = std::min(powers_.size(), other.powers_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Power& a = powers_[i];
    const Power& b = other.powers_[i];
    if (a.var != b.var) return a.var <=> b.var;
    if (a.exp != b.exp) return a.exp <=> b.exp;
  }
  return powers_.size() <=> other.powers_.size();
}

std::string Term::to_string() const {
  // Free variables first, then dependent, then auxiliary; descending index
  // within each class. Storage is descending by key, so walk class blocks.
  std::string out;
  for (VarClass cls : {VarClass::Free, VarClass::Dependent, VarClass::Auxiliary}) {
    for (const Power& p : powers_) {
      if (p.var.cls() != cls) continue;
      if (!out.empty()) out += '*';
      out += p.var.name();
      if (p.exp > 1) out += '^' + std::to_string(p.exp);
    }
  }
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back({Term{}, c});
}

Polynomial::Polynomial(const Term& t, const Integer& c) {
  if (c != 0) terms_.push_back({t, c});
}

Polynomial Polynomial::from_monomials(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return a.term > b.term; });
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (Monomial& m : monomials) {
    if (!out.empty() && out.back().term == m.term) {
      out.back().coeff += m.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(m));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::from_sorted(std::vector<Monomial> monomials) {
  Polynomial p;
  p.terms_ = std::move(monomials);
  return p;
}

Integer Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  const Monomial& last = terms_.back();
  return last.term.is_constant() ? last.coeff : Integer(0);
}

std::uint32_t Polynomial::degree_in(Variable v) const {
  std::uint32_t d = 0;
  for (const Monomial& m : terms_) d = std::max(d, m.term.degree_in(v));
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Monomial& m : terms_) d = std::max(d, m.term.total_degree());
  return d;
}

std::uint32_t Polynomial::max_degree() const {
  std::uint32_t d = 0;
  for (const Monomial& m : terms_) {
    for (const Power& p : m.term.powers()) d = std::max(d, p.exp);
  }
  return d;
}

Polynomial Polynomial::coefficient(Variable v, std::uint32_t d) const {
  std::vector<Monomial> out;
  for (const Monomial& m : terms_) {
    if (m.term.degree_in(v) == d) out.push_back({m.term.without(v), m.coeff});
  }
  // Removing a fixed power of v preserves relative lex order only for the
  // variables above v, so re-sort.
  return from_monomials(std::move(out));
}

Polynomial Polynomial::leading_coeff(Variable v) const {
  return coefficient(v, degree_in(v));
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> vars;
  for (const Monomial& m : terms_) {
    for (const Power& p : m.term.powers()) vars.push_back(p.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Variable Polynomial::main_variable() const {
  // Lex-leading monomial carries the highest variable.
  return terms_.front().term.main_variable();
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const Monomial& m : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::divide_integer(const Integer& d) const {
  Polynomial out = *this;
  if (d == 1) return out;
  for (Monomial& m : out.terms_) mpz_divexact(m.coeff.get_mpz_t(), m.coeff.get_mpz_t(), d.get_mpz_t());
  return out;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  return divide_integer(content());
}

Polynomial Polynomial::normalized() const {
  Polynomial p = primitive_part();
  if (!p.is_zero() && p.terms_.front().coeff < 0) p = -p;
  return p;
}

Polynomial Polynomial::multiply_term(const Term& t, const Integer& c) const {
  if (c == 0) return {};
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const Monomial& m : terms_) out.push_back({m.term * t, m.coeff * c});
  // Lex order is multiplicative.
  return from_sorted(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Monomial& m : out.terms_) m.coeff = -m.coeff;
  return out;
}

namespace {

std::vector<Polynomial::Monomial> merge_add(std::span<const Polynomial::Monomial> a,
                                            std::span<const Polynomial::Monomial> b, int sign) {
  std::vector<Polynomial::Monomial> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].term > b[j].term)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].term > a[i].term) {
      out.push_back({b[j].term, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff) : Integer(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].term, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_add(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_add(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = kernels::multiply(*this, o);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (Monomial& m : terms_) m.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return kernels::multiply(a, b); }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Monomial& m : terms_) {
    const bool negative = m.coeff < 0;
    Integer mag = abs(m.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.term.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += m.term.to_string();
    }
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial expression() {
    skip_space();
    Polynomial acc;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = product();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc *= power();
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'u' || c == 'x' || c == 'z') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::variable(parse_variable(text_.substr(start, pos_ - start)));
    }
    fail("expected a term");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace geoprove
