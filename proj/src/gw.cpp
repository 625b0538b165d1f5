#include "charnum/gw.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace charnum {
namespace {

// Lexicographic recursion measure on the divisor-stripped codimension
// profile: (degree, remaining codimension, distance from full concentration).
// Every recursive call made while solving strictly decreases it.
struct GwMeasure {
  int d;
  long stripped_sum;
  long concentration_deficit;
  friend auto operator<=>(const GwMeasure&, const GwMeasure&) = default;
};

GwMeasure gw_measure(const GwQuery& q) {
  long s = 0;
  long w = 0;
  for (int c : q.codims) {
    if (c >= 2) {
      s += c;
      w += static_cast<long>(c) * c;
    }
  }
  return GwMeasure{q.d, s, q.r * s - w};
}

Rational solve_by_wdvv(const GwQuery& q, MemoCache& cache, EvalStrategy* strategy);

}  // namespace

Correlator to_correlator(const GwQuery& q) {
  std::vector<Insertion> ins;
  ins.reserve(q.codims.size());
  for (int c : q.codims) ins.push_back({0, 0, c});
  return Correlator(q.r, q.d, std::move(ins));
}

std::vector<WdvvTerm> wdvv_terms(const GwQuery& q, const std::array<int, 4>& distinguished) {
  const int n = static_cast<int>(q.codims.size());
  if (n < 4) throw InvalidQuery("wdvv_terms: need at least 4 marks");
  if (n > 28) throw InvalidQuery("wdvv_terms: too many marks");
  for (int i = 0; i < 4; ++i) {
    if (distinguished[i] < 0 || distinguished[i] >= n)
      throw InvalidQuery("wdvv_terms: distinguished mark out of range");
    for (int j = 0; j < i; ++j)
      if (distinguished[i] == distinguished[j])
        throw InvalidQuery("wdvv_terms: distinguished marks must be distinct");
  }

  std::vector<int> spectators;
  for (int i = 0; i < n; ++i) {
    if (i != distinguished[0] && i != distinguished[1] && i != distinguished[2] &&
        i != distinguished[3])
      spectators.push_back(i);
  }

  std::vector<WdvvTerm> terms;
  const std::uint32_t base_a = (1u << distinguished[0]) | (1u << distinguished[1]);
  const std::uint32_t subsets = 1u << spectators.size();
  for (std::uint32_t subset = 0; subset < subsets; ++subset) {
    std::uint32_t a_mask = base_a;
    for (std::size_t i = 0; i < spectators.size(); ++i)
      if (subset & (1u << i)) a_mask |= 1u << spectators[i];
    const int size_a = std::popcount(a_mask);
    const int size_b = n - size_a;
    for (int d_a = 0; d_a <= q.d; ++d_a) {
      const int d_b = q.d - d_a;
      // A degree-0 twig needs >= 3 special points counting the gluing mark.
      if (d_a == 0 && size_a + 1 < 3) continue;
      if (d_b == 0 && size_b + 1 < 3) continue;
      for (int e = 0; e <= q.r; ++e) {
        WdvvTerm t;
        t.a_mask = a_mask;
        t.d_a = d_a;
        t.d_b = d_b;
        t.e = e;
        t.a.r = q.r;
        t.a.d = d_a;
        t.b.r = q.r;
        t.b.d = d_b;
        for (int i = 0; i < n; ++i) {
          if (a_mask & (1u << i))
            t.a.codims.push_back(q.codims[i]);
          else
            t.b.codims.push_back(q.codims[i]);
        }
        t.a.codims.push_back(e);
        t.b.codims.push_back(q.r - e);
        terms.push_back(std::move(t));
      }
    }
  }
  return terms;
}

Rational gw_invariant(const GwQuery& q, MemoCache& cache, EvalStrategy* strategy) {
  if (q.r < 1) throw InvalidQuery("gw_invariant: target dimension r must be >= 1");
  if (q.d < 0) throw InvalidQuery("gw_invariant: degree must be >= 0");
  const int n = static_cast<int>(q.codims.size());
  if (n < 1) throw InvalidQuery("gw_invariant: at least one mark required");
  if (q.d == 0 && n < 3) throw InvalidQuery("gw_invariant: degree 0 requires at least 3 marks");
  for (int c : q.codims)
    if (c < 0) throw InvalidQuery("gw_invariant: negative codimension");

  for (int c : q.codims)
    if (c > q.r) return Rational();
  const long codim_sum = std::accumulate(q.codims.begin(), q.codims.end(), 0L);
  if (codim_sum != dimension(q.r, q.d, n)) return Rational();

  // M_{0,n}(P^r, 0) = M_{0,n} x P^r: psi-free integrals survive only at n=3.
  if (q.d == 0) return degree_zero_value(to_correlator(q));

  // Top-dimensionality with one mark forces r = d = c = 1: the point class
  // on M_{0,1}(P^1, 1), which the evaluation map identifies with P^1.
  if (n == 1) {
    assert(q.r == 1 && q.d == 1 && q.codims[0] == 1);
    return Rational(1);
  }

  // String equation: with every psi exponent zero a codim-0 mark kills the value.
  if (std::find(q.codims.begin(), q.codims.end(), 0) != q.codims.end()) return Rational();

  const CanonicalKey key = canonical_key(to_correlator(q));
  if (const Rational* hit = cache.lookup(key)) return *hit;

  Rational value;
  const auto one = std::find(q.codims.begin(), q.codims.end(), 1);
  if (one != q.codims.end()) {
    // Divisor equation, forward: each hyperplane insertion is a factor d.
    GwQuery rest = q;
    rest.codims.erase(rest.codims.begin() + (one - q.codims.begin()));
    assert(gw_measure(rest) < gw_measure(q));
    value = Rational(q.d) * gw_invariant(rest, cache, strategy);
  } else if (n == 2) {
    // Two codims in [2, r] at top dimension force d = 1 and both equal r:
    // one line through two general points.
    assert(q.d == 1 && q.codims[0] == q.r && q.codims[1] == q.r);
    value = Rational(1);
  } else {
    value = solve_by_wdvv(q, cache, strategy);
  }
  cache.insert(key, value);
  return value;
}

namespace {

Rational wdvv_term_value(const WdvvTerm& t, MemoCache& cache, EvalStrategy* strategy,
                         [[maybe_unused]] const GwMeasure& parent) {
  const GwQuery* first = &t.a;
  const GwQuery* second = &t.b;
  if (t.d_b == 0 && t.d_a != 0) std::swap(first, second);
  // The closed-form factor goes first; a zero there skips the partner, so the
  // only recursive evaluations are the fused same-degree terms (which the
  // measure covers) and genuinely lower-degree products.
  const Rational va = gw_invariant(*first, cache, strategy);
  if (va.is_zero()) return Rational();
  assert(second->d == 0 || gw_measure(*second) < parent);
  return va * gw_invariant(*second, cache, strategy);
}

Rational solve_by_wdvv(const GwQuery& q, MemoCache& cache, EvalStrategy* strategy) {
  // Established by gw_invariant: d >= 1, n >= 3, top-dimensional, all codims
  // in [2, r] (hence r >= 2).
  assert(q.r >= 2);
  std::vector<int> codims = q.codims;
  std::sort(codims.begin(), codims.end());
  const int n = static_cast<int>(codims.size());

  // Split a minimal-codimension mark s as eta * eta^{c_s - 1} and relate the
  // two pairings (y x | j k) and (y j | x k) of the distinguished quadruple,
  // with j, k of maximal codimension.  The target reappears as the unique
  // term fusing {y, x} on a degree-0 twig; all other same-degree terms either
  // exceed codimension r, lose a divisor insertion, or move a codimension
  // unit from the minimal mark onto a maximal one.
  int s_pos = 0;
  if (strategy && strategy->randomized) {
    int ties = 0;
    while (ties < n && codims[ties] == codims[0]) ++ties;
    s_pos = strategy->pick(ties);
  }
  const int cs = codims[s_pos];
  std::vector<int> others = codims;
  others.erase(others.begin() + s_pos);
  const int m = static_cast<int>(others.size());

  int j_pos = m - 1;
  int k_pos = m - 2;
  if (strategy && strategy->randomized) {
    j_pos = strategy->pick(m);
    k_pos = strategy->pick(m - 1);
    if (k_pos >= j_pos) ++k_pos;
  }

  GwQuery system;
  system.r = q.r;
  system.d = q.d;
  system.codims.reserve(n + 1);
  system.codims.push_back(1);       // y
  system.codims.push_back(cs - 1);  // x
  for (int c : others) system.codims.push_back(c);

  const std::array<int, 4> pairing_yx = {0, 1, 2 + j_pos, 2 + k_pos};
  const std::array<int, 4> pairing_yj = {0, 2 + j_pos, 1, 2 + k_pos};
  const GwMeasure parent = gw_measure(q);

  Rational acc;
  for (const WdvvTerm& t : wdvv_terms(system, pairing_yj))
    acc += wdvv_term_value(t, cache, strategy, parent);
  bool skipped_target = false;
  for (const WdvvTerm& t : wdvv_terms(system, pairing_yx)) {
    if (!skipped_target && t.d_a == 0 && t.a_mask == 3u && t.e == q.r - cs) {
      skipped_target = true;
      continue;
    }
    acc -= wdvv_term_value(t, cache, strategy, parent);
  }
  assert(skipped_target);
  return acc;
}

}  // namespace

}  // namespace charnum
