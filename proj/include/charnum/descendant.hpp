#pragma once

#include <utility>
#include <vector>

#include "charnum/correlator.hpp"
#include "charnum/memo_cache.hpp"
#include "charnum/rational.hpp"
#include "charnum/strategy.hpp"

namespace charnum {

struct WeightedTerm {
  Rational coeff;
  Correlator corr;
};

struct ProductTerm {
  Rational coeff;
  Correlator a;
  Correlator b;
};

/// Puncture (string) equation: removes one tau_0(0) mark, lowering one psi
/// exponent per emitted term.  Modified psi exponents ride along untouched,
/// so the reduction is valid for twisted correlators too.  Terms whose psi
/// exponent would go negative are omitted.
std::vector<WeightedTerm> puncture_reduce(const Correlator& corr);

/// Dilaton equation: removes one tau_1(0) mark; the coefficient is n - 2
/// where n counts the remaining marks.
WeightedTerm dilaton_reduce(const Correlator& corr);

/// Divisor equation, forward: removes one tau_0(1) mark.  One term with
/// coefficient d, plus a shift term (u_j - 1, c_j + 1) for every other mark
/// with u_j >= 1.  Shift terms with c_j + 1 > r are kept; they vanish at
/// evaluation through the eta^{>r} = 0 rule.
std::vector<WeightedTerm> divisor_reduce(const Correlator& corr);

/// Divisor equation run backwards: expresses corr through correlators with
/// one extra tau_0(1) mark, at the price of rational coefficients 1/d.
/// Requires d > 0.
std::vector<WeightedTerm> divisor_lift(const Correlator& corr);

/// Topological recursion relation for a pivot mark with u >= 1, valid with
/// at least three marks.  Splits the space along boundary divisors with the
/// pivot on the A twig and both spectator marks on the B twig, summing over
/// degree splits and the diagonal exponent e; unstable degree-0 sides are
/// skipped.  Requires every m = 0.
std::vector<ProductTerm> trr_reduce(const Correlator& corr, int pivot, int spectator_j,
                                    int spectator_k);

/// Exact value of a usual gravitational descendant (every m = 0).
///
/// Non-top correlators and any eta exponent > r give 0; degree 0 is closed
/// form; tau_0(0) and tau_1(0) marks strip via the puncture and dilaton
/// equations; remaining psi exponents reduce through the topological
/// recursion relation (after divisor lifts when fewer than three marks);
/// psi-free correlators land in gw_invariant.  Memoized by canonical key.
Rational eval_descendant(const Correlator& corr, MemoCache& cache,
                         EvalStrategy* strategy = nullptr);

}  // namespace charnum
