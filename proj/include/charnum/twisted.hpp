#pragma once

#include <cstdint>
#include <vector>

#include "charnum/correlator.hpp"
#include "charnum/descendant.hpp"
#include "charnum/memo_cache.hpp"
#include "charnum/rational.hpp"
#include "charnum/strategy.hpp"

namespace charnum {

/// One boundary splitting used by the twisted recursion: the marks in a_mask
/// (pivot included, at least two of them) sit on a contracting degree-0 twig;
/// m_sum and c_sum aggregate their modified-psi and eta exponents.
struct SplitTerm {
  std::uint32_t a_mask = 0;
  int m_sum = 0;
  int c_sum = 0;
};

/// All splittings A of the marks with pivot in A and |A| >= 2.  B = [n] \ A
/// may be empty: the B side then consists of the gluing mark alone, stable
/// because the degree stays positive.
std::vector<SplitTerm> twisted_splittings(const Correlator& corr, int pivot);

/// One step of the recursion for a pivot mark with m >= 1 on a positive-
/// degree space.  Emits the correlator with the pivot traded to
/// (u + 1, m - 1, c), plus, for every splitting, the B-side correlator
/// carrying a new mark (0, m_sum - 1, c_sum) weighted by minus the
/// Knudsen-Mumford integral of the A-side psi exponents (gluing mark
/// included); splittings with vanishing integral are omitted.
std::vector<WeightedTerm> twisted_reduce(const Correlator& corr, int pivot);

/// Exact value of a twisted descendant.
///
/// Reduces the total modified-psi exponent through twisted_reduce until none
/// is left, handing over to eval_descendant; on a single-mark space the
/// modified psi class equals the usual one, so m folds into u.  Memoized by
/// canonical key.
Rational eval_twisted(const Correlator& corr, MemoCache& cache, EvalStrategy* strategy = nullptr);

}  // namespace charnum
