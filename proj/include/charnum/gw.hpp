#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "charnum/correlator.hpp"
#include "charnum/memo_cache.hpp"
#include "charnum/rational.hpp"
#include "charnum/strategy.hpp"

namespace charnum {

/// A psi-free bracket <tau_0(c_1)...tau_0(c_n)>_d: a genus-0 Gromov-Witten
/// invariant of P^r.  Nonzero only when the codimensions sum to the moduli
/// dimension.
struct GwQuery {
  int r = 0;
  int d = 0;
  std::vector<int> codims;
};

Correlator to_correlator(const GwQuery& q);

/// One boundary term of an associativity relation: the marks in a_mask go to
/// the degree-d_a side together with a diagonal insertion tau_0(e); the rest
/// go to the degree-d_b side with tau_0(r-e).
struct WdvvTerm {
  std::uint32_t a_mask = 0;
  int d_a = 0;
  int d_b = 0;
  int e = 0;
  GwQuery a;
  GwQuery b;
};

/// All stable boundary terms of one side of the WDVV relation on the system
/// q, with distinguished[0], distinguished[1] pinned to the A side and
/// distinguished[2], distinguished[3] pinned to the B side.  The relation is
/// that the total value is unchanged when two distinguished marks trade
/// places across the bar.
std::vector<WdvvTerm> wdvv_terms(const GwQuery& q, const std::array<int, 4>& distinguished);

/// Exact value of a Gromov-Witten invariant of P^r.
///
/// Codimension-0 insertions vanish by the string equation, codimension-1
/// insertions strip off with a factor d by the divisor equation, and the
/// remaining invariants reduce through the WDVV associativity relation down
/// to the degree-0 three-point values and the two-point line count
/// <tau_0(r) tau_0(r)>_1 = 1.
Rational gw_invariant(const GwQuery& q, MemoCache& cache, EvalStrategy* strategy = nullptr);

}  // namespace charnum
