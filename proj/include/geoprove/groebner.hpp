#pragma once

#include <compare>
#include <vector>

#include "geoprove/algebraizer.hpp"
#include "geoprove/budget.hpp"
#include "geoprove/result.hpp"

namespace geoprove {

struct MonomialOrder {
  enum class Kind { Lex, DegRevLex };
  Kind kind = Kind::DegRevLex;

  static constexpr MonomialOrder lex() { return {Kind::Lex}; }
  static constexpr MonomialOrder degrevlex() { return {Kind::DegRevLex}; }

  std::strong_ordering compare(const Term& a, const Term& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

/// Leading monomial under `order`; precondition !p.is_zero().
const Polynomial::Monomial& leading_monomial(const Polynomial& p, MonomialOrder order);

/// Fraction-free normal form: the result is a positive rational multiple of
/// the field normal form, content removed. No monomial of it is divisible by
/// a leading term of `basis`.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, MonomialOrder order);

/// lcm-cancellation of the leading terms, scaled to stay in Z[vars].
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, MonomialOrder order);

struct GroebnerBasis {
  /// Sorted by descending leading term; each primitive with positive
  /// leading coefficient.
  std::vector<Polynomial> polys;
  MonomialOrder order;

  bool is_unit() const { return polys.size() == 1 && polys[0].is_constant(); }
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced basis by Buchberger's algorithm with the normal selection
/// strategy, the coprime criterion and the chain criterion. Stops early,
/// returning {1}, as soon as a nonzero constant appears.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, const Budget& budget = {},
                         GroebnerStats* stats = nullptr);

/// Post-hoc check that S-polynomials reduce to zero. By default pairs
/// covered by the coprime or chain criterion are skipped; `all_pairs`
/// reduces every one. Throws TimeoutError past the budget.
bool is_groebner_basis(const std::vector<Polynomial>& polys, MonomialOrder order, const Budget& budget = {},
                       bool all_pairs = false);

/// Whether g * h lies in the radical of <gens>, h the product of
/// `assumed_nonzero`: g vanishes wherever every generator vanishes and no
/// assumed polynomial does. Decided as 1 in <gens, 1 - z0*g, 1 - zi*hi>.
bool radical_membership(const Polynomial& g, const std::vector<Polynomial>& gens, const Budget& budget = {},
                        const std::vector<Polynomial>& assumed_nonzero = {},
                        MonomialOrder order = MonomialOrder::degrevlex());

enum class NdgMode { None, Side, Wu };

std::string_view ndg_mode_name(NdgMode m);

/// `wu_ndgs` supplies the conditions for NdgMode::Wu; when null they are
/// computed by triangulation.
ProofResult prove_groebner(const AlgebraicSystem& sys, NdgMode mode, const Budget& budget = {},
                           MonomialOrder order = MonomialOrder::degrevlex(),
                           const std::vector<NdgCondition>* wu_ndgs = nullptr);

}  // namespace geoprove
