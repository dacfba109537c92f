#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "geoprove/algebraizer.hpp"
#include "geoprove/division.hpp"
#include "geoprove/polynomial.hpp"
#include "geoprove/prover.hpp"

namespace geoprove::test {

inline std::filesystem::path corpus_dir() { return GEOPROVE_CORPUS_DIR; }
inline std::filesystem::path data_dir() { return GEOPROVE_TEST_DATA_DIR; }

/// Every corpus theorem (worked examples, then the ten-theorem set).
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const char* sub : {"worked", "chou"}) {
    std::vector<std::filesystem::path> part;
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir() / sub)) {
      if (e.path().extension() == ".gp") part.push_back(e.path());
    }
    std::sort(part.begin(), part.end());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline Polynomial P(const std::string& s) { return parse_polynomial(s); }

inline ConstructionProtocol load(const std::string& rel) {
  return parse_protocol(read_text_file(corpus_dir() / rel));
}

/// Random sparse polynomial over u1..u3, x1..x3.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  Polynomial poly(int max_terms = 5, int max_exp = 3, int max_coeff = 9) {
    std::vector<Polynomial::Monomial> ms;
    const int n = pick(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Term::Storage powers;
      for (Variable v : vars()) {
        const int e = pick(0, max_exp);
        if (e > 0 && pick(0, 1)) powers.push_back({v, static_cast<std::uint32_t>(e)});
      }
      ms.push_back({Term(powers), Integer(pick(-max_coeff, max_coeff))});
    }
    return Polynomial::from_monomials(std::move(ms));
  }

  /// A polynomial that genuinely contains `v`.
  Polynomial poly_in(Variable v, int max_terms = 4, int max_exp = 3) {
    for (;;) {
      Polynomial p = poly(max_terms, max_exp);
      if (p.contains(v)) return p;
    }
  }

  Assignment point() {
    Assignment a;
    for (Variable v : vars()) a[v] = Rational(pick(-30, 30), pick(1, 9));
    return a;
  }

  Variable variable() { return vars()[static_cast<std::size_t>(pick(0, 5))]; }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  static const std::vector<Variable>& vars() {
    static const std::vector<Variable> vs = {Variable::free(1), Variable::free(2), Variable::free(3),
                                             Variable::dependent(1), Variable::dependent(2),
                                             Variable::dependent(3)};
    return vs;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace geoprove::test
