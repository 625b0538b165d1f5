#include "charnum/twisted.hpp"

#include <algorithm>
#include <cassert>

namespace charnum {
namespace {

int total_mpsi(const Correlator& corr) {
  int total = 0;
  for (const Insertion& ins : corr.insertions()) total += ins.m;
  return total;
}

}  // namespace

std::vector<SplitTerm> twisted_splittings(const Correlator& corr, int pivot) {
  const int n = corr.n();
  if (n < 2) throw InvalidQuery("twisted_splittings: need at least two marks");
  if (n > 28) throw InvalidQuery("twisted_splittings: too many marks");
  if (pivot < 0 || pivot >= n) throw InvalidQuery("twisted_splittings: pivot out of range");
  const auto& ins = corr.insertions();
  if (ins[pivot].m < 1)
    throw InvalidQuery("twisted_splittings: pivot needs a positive modified psi exponent");
  assert(corr.d() > 0);  // guaranteed by the correlator invariants

  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != pivot) others.push_back(i);

  std::vector<SplitTerm> splits;
  const std::uint32_t subsets = 1u << others.size();
  for (std::uint32_t subset = 1; subset < subsets; ++subset) {  // |A| >= 2 excludes the empty pick
    SplitTerm s;
    s.a_mask = 1u << pivot;
    s.m_sum = ins[pivot].m;
    s.c_sum = ins[pivot].c;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (subset & (1u << i)) {
        s.a_mask |= 1u << others[i];
        s.m_sum += ins[others[i]].m;
        s.c_sum += ins[others[i]].c;
      }
    }
    splits.push_back(s);
  }
  return splits;
}

std::vector<WeightedTerm> twisted_reduce(const Correlator& corr, int pivot) {
  const int n = corr.n();
  if (n < 2)
    throw InvalidQuery(
        "twisted_reduce: single-mark correlators convert directly (modified psi = psi)");
  const auto& ins = corr.insertions();
  if (pivot < 0 || pivot >= n) throw InvalidQuery("twisted_reduce: pivot out of range");
  if (ins[pivot].m < 1)
    throw InvalidQuery("twisted_reduce: pivot needs a positive modified psi exponent");

  std::vector<WeightedTerm> terms;

  // psi_bar = psi - beta at the pivot: the psi part raises u and lowers m.
  std::vector<Insertion> traded = ins;
  ++traded[pivot].u;
  --traded[pivot].m;
  terms.push_back({Rational(1), Correlator(corr.r(), corr.d(), std::move(traded))});

  // The beta part: one boundary term per splitting with a contracting twig.
  // On that twig only the usual psi exponents survive, as a Knudsen-Mumford
  // integral; the modified-psi and eta exponents of the A marks aggregate
  // onto the new gluing mark of the B side.
  for (const SplitTerm& split : twisted_splittings(corr, pivot)) {
    std::vector<int> a_psi;
    std::vector<Insertion> b_ins;
    b_ins.push_back({0, split.m_sum - 1, split.c_sum});
    for (int i = 0; i < n; ++i) {
      if (split.a_mask & (1u << i))
        a_psi.push_back(ins[i].u);
      else
        b_ins.push_back(ins[i]);
    }
    a_psi.push_back(0);  // the gluing mark x_A
    const Rational km = km_integral(a_psi);
    if (km.is_zero()) continue;
    terms.push_back({-km, Correlator(corr.r(), corr.d(), std::move(b_ins))});
  }
  return terms;
}

Rational eval_twisted(const Correlator& input, MemoCache& cache, EvalStrategy* strategy) {
  const Correlator corr = input.canonicalized();
  const int n = corr.n();
  const auto& ins = corr.insertions();

  const bool any_mpsi =
      std::any_of(ins.begin(), ins.end(), [](const Insertion& i) { return i.m > 0; });
  if (!any_mpsi) return eval_descendant(corr, cache, strategy);

  for (const Insertion& i : ins)
    if (i.c > corr.r()) return Rational();
  if (!is_top(corr)) return Rational();

  // On a single-mark space the modified psi class equals the usual one.
  if (n == 1) {
    const Correlator folded(corr.r(), corr.d(), {{ins[0].u + ins[0].m, 0, ins[0].c}});
    return eval_descendant(folded, cache, strategy);
  }

  const CanonicalKey key = canonical_key(corr);
  if (const Rational* hit = cache.lookup(key)) return *hit;

  int pivot = -1;
  if (!strategy || !strategy->randomized) {
    for (int i = 0; i < n; ++i) {
      if (ins[i].m >= 1) {
        pivot = i;
        break;
      }
    }
  } else {
    std::vector<int> pivots;
    for (int i = 0; i < n; ++i)
      if (ins[i].m >= 1) pivots.push_back(i);
    pivot = pivots[strategy->pick(static_cast<int>(pivots.size()))];
  }

  Rational value;
  [[maybe_unused]] const int mpsi_before = total_mpsi(corr);
  for (const WeightedTerm& t : twisted_reduce(corr, pivot)) {
    assert(total_mpsi(t.corr) == mpsi_before - 1);
    value += t.coeff * eval_twisted(t.corr, cache, strategy);
  }
  cache.insert(key, value);
  return value;
}

}  // namespace charnum
