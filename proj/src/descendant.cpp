#include "charnum/descendant.hpp"

#include <algorithm>
#include <cassert>

#include "charnum/gw.hpp"

namespace charnum {
namespace {

int find_mark(const std::vector<Insertion>& ins, const Insertion& target) {
  for (std::size_t i = 0; i < ins.size(); ++i)
    if (ins[i] == target) return static_cast<int>(i);
  return -1;
}

// The puncture/dilaton/divisor equations remove a mark, so the reduced space
// must still be stable.
void require_reducible(const Correlator& corr, const char* op) {
  if (corr.n() < 2) throw InvalidQuery(std::string(op) + ": need at least two marks");
  if (corr.d() == 0 && corr.n() - 1 < 3)
    throw InvalidQuery(std::string(op) + ": removing a mark would destabilize the space");
}

std::vector<Insertion> erase_mark(const std::vector<Insertion>& ins, int idx) {
  std::vector<Insertion> out = ins;
  out.erase(out.begin() + idx);
  return out;
}

}  // namespace

std::vector<WeightedTerm> puncture_reduce(const Correlator& corr) {
  const int mark = find_mark(corr.insertions(), Insertion{0, 0, 0});
  if (mark < 0) throw InvalidQuery("puncture_reduce: no tau_0(0) mark present");
  require_reducible(corr, "puncture_reduce");
  const std::vector<Insertion> rest = erase_mark(corr.insertions(), mark);
  std::vector<WeightedTerm> terms;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j].u == 0) continue;
    std::vector<Insertion> ins = rest;
    --ins[j].u;
    terms.push_back({Rational(1), Correlator(corr.r(), corr.d(), std::move(ins))});
  }
  return terms;
}

WeightedTerm dilaton_reduce(const Correlator& corr) {
  const int mark = find_mark(corr.insertions(), Insertion{1, 0, 0});
  if (mark < 0) throw InvalidQuery("dilaton_reduce: no tau_1(0) mark present");
  require_reducible(corr, "dilaton_reduce");
  std::vector<Insertion> rest = erase_mark(corr.insertions(), mark);
  const int remaining = static_cast<int>(rest.size());
  return {Rational(remaining - 2), Correlator(corr.r(), corr.d(), std::move(rest))};
}

std::vector<WeightedTerm> divisor_reduce(const Correlator& corr) {
  const int mark = find_mark(corr.insertions(), Insertion{0, 0, 1});
  if (mark < 0) throw InvalidQuery("divisor_reduce: no tau_0(1) mark present");
  require_reducible(corr, "divisor_reduce");
  const std::vector<Insertion> rest = erase_mark(corr.insertions(), mark);
  std::vector<WeightedTerm> terms;
  if (corr.d() > 0)
    terms.push_back({Rational(corr.d()), Correlator(corr.r(), corr.d(), rest)});
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j].u == 0) continue;
    std::vector<Insertion> ins = rest;
    --ins[j].u;
    ++ins[j].c;
    terms.push_back({Rational(1), Correlator(corr.r(), corr.d(), std::move(ins))});
  }
  return terms;
}

std::vector<WeightedTerm> divisor_lift(const Correlator& corr) {
  if (corr.d() == 0) throw InvalidQuery("divisor_lift: degree must be positive");
  const Rational inv_d(Integer(1), Integer(corr.d()));
  std::vector<WeightedTerm> terms;
  std::vector<Insertion> lifted = corr.insertions();
  lifted.push_back({0, 0, 1});
  terms.push_back({inv_d, Correlator(corr.r(), corr.d(), std::move(lifted))});
  for (std::size_t j = 0; j < corr.insertions().size(); ++j) {
    if (corr.insertions()[j].u == 0) continue;
    std::vector<Insertion> ins = corr.insertions();
    --ins[j].u;
    ++ins[j].c;
    terms.push_back({-inv_d, Correlator(corr.r(), corr.d(), std::move(ins))});
  }
  return terms;
}

std::vector<ProductTerm> trr_reduce(const Correlator& corr, int pivot, int spectator_j,
                                    int spectator_k) {
  const int n = corr.n();
  if (n < 3) throw InvalidQuery("trr_reduce: need at least three marks");
  if (pivot < 0 || pivot >= n || spectator_j < 0 || spectator_j >= n || spectator_k < 0 ||
      spectator_k >= n || pivot == spectator_j || pivot == spectator_k ||
      spectator_j == spectator_k)
    throw InvalidQuery("trr_reduce: pivot and spectators must be three distinct marks");
  const auto& ins = corr.insertions();
  if (ins[pivot].u < 1) throw InvalidQuery("trr_reduce: pivot needs a positive psi exponent");
  for (const Insertion& i : ins)
    if (i.m != 0) throw InvalidQuery("trr_reduce: modified psi exponents not allowed");

  std::vector<int> spectators;
  for (int i = 0; i < n; ++i)
    if (i != pivot && i != spectator_j && i != spectator_k) spectators.push_back(i);

  std::vector<ProductTerm> terms;
  const std::uint32_t subsets = 1u << spectators.size();
  for (std::uint32_t subset = 0; subset < subsets; ++subset) {
    std::vector<int> side_a{pivot};
    std::vector<int> side_b{spectator_j, spectator_k};
    for (std::size_t i = 0; i < spectators.size(); ++i) {
      if (subset & (1u << i))
        side_a.push_back(spectators[i]);
      else
        side_b.push_back(spectators[i]);
    }
    for (int d_a = 0; d_a <= corr.d(); ++d_a) {
      const int d_b = corr.d() - d_a;
      if (d_a == 0 && static_cast<int>(side_a.size()) + 1 < 3) continue;
      if (d_b == 0 && static_cast<int>(side_b.size()) + 1 < 3) continue;
      for (int e = 0; e <= corr.r(); ++e) {
        std::vector<Insertion> a_ins;
        a_ins.reserve(side_a.size() + 1);
        for (int i : side_a) a_ins.push_back(ins[i]);
        --a_ins[0].u;  // the pivot sits first on the A side
        a_ins.push_back({0, 0, e});
        std::vector<Insertion> b_ins;
        b_ins.reserve(side_b.size() + 1);
        b_ins.push_back({0, 0, corr.r() - e});
        for (int i : side_b) b_ins.push_back(ins[i]);
        terms.push_back({Rational(1), Correlator(corr.r(), d_a, std::move(a_ins)),
                         Correlator(corr.r(), d_b, std::move(b_ins))});
      }
    }
  }
  return terms;
}

namespace {

thread_local int eval_depth = 0;

struct DepthGuard {
  DepthGuard() {
    ++eval_depth;
    assert(eval_depth < 20000);
  }
  ~DepthGuard() { --eval_depth; }
};

Rational weighted_sum(const std::vector<WeightedTerm>& terms, MemoCache& cache,
                      EvalStrategy* strategy) {
  Rational acc;
  for (const WeightedTerm& t : terms) {
    if (t.coeff.is_zero()) continue;
    acc += t.coeff * eval_descendant(t.corr, cache, strategy);
  }
  return acc;
}

Rational product_sum(const std::vector<ProductTerm>& terms, MemoCache& cache,
                     EvalStrategy* strategy) {
  Rational acc;
  for (const ProductTerm& t : terms) {
    const Correlator* first = &t.a;
    const Correlator* second = &t.b;
    if (t.b.d() == 0 && t.a.d() != 0) std::swap(first, second);
    const Rational va = eval_descendant(*first, cache, strategy);
    if (va.is_zero()) continue;
    acc += t.coeff * va * eval_descendant(*second, cache, strategy);
  }
  return acc;
}

enum class Step { Puncture, Dilaton, DivisorStrip, Trr, Lift, Gw };

}  // namespace

Rational eval_descendant(const Correlator& input, MemoCache& cache, EvalStrategy* strategy) {
  for (const Insertion& ins : input.insertions())
    if (ins.m != 0)
      throw InvalidQuery("eval_descendant: modified psi exponents present; use eval_twisted");

  const Correlator corr = input.canonicalized();
  const int r = corr.r();
  const int d = corr.d();
  const int n = corr.n();
  const auto& ins = corr.insertions();

  for (const Insertion& i : ins)
    if (i.c > r) return Rational();
  if (!is_top(corr)) return Rational();
  if (d == 0) return degree_zero_value(corr);

  const CanonicalKey key = canonical_key(corr);
  if (const Rational* hit = cache.lookup(key)) return *hit;

  DepthGuard guard;

  const bool has_puncture_mark = find_mark(ins, {0, 0, 0}) >= 0;
  const bool has_dilaton_mark = find_mark(ins, {1, 0, 0}) >= 0;
  const bool has_divisor_mark = find_mark(ins, {0, 0, 1}) >= 0;
  const bool any_psi = std::any_of(ins.begin(), ins.end(), [](const Insertion& i) { return i.u > 0; });

  Step step;
  int pivot = -1;
  int sj = -1;
  int sk = -1;
  if (!strategy || !strategy->randomized) {
    if (has_puncture_mark && n >= 2) {
      step = Step::Puncture;
    } else if (has_dilaton_mark && n >= 2) {
      step = Step::Dilaton;
    } else if (!any_psi) {
      step = Step::Gw;
    } else if (n >= 3) {
      step = Step::Trr;
      int max_u = 0;
      for (const Insertion& i : ins) max_u = std::max(max_u, i.u);
      for (int i = 0; i < n; ++i) {
        if (ins[i].u == max_u) {
          pivot = i;
          break;
        }
      }
      sj = pivot == 0 ? 1 : 0;
      sk = pivot <= 1 ? 2 : 1;
    } else {
      step = Step::Lift;
    }
  } else {
    std::vector<Step> options;
    if (has_puncture_mark && n >= 2) options.push_back(Step::Puncture);
    if (has_dilaton_mark && n >= 2) options.push_back(Step::Dilaton);
    // Stripping tau_0(1) below three remaining marks bounces against the
    // divisor lift, so it is only offered where it makes progress.
    if (has_divisor_mark && n >= 2 && (!any_psi || n >= 4)) options.push_back(Step::DivisorStrip);
    if (!any_psi) options.push_back(Step::Gw);
    if (any_psi && n >= 3) options.push_back(Step::Trr);
    if (any_psi && n < 3) options.push_back(Step::Lift);
    step = options[strategy->pick(static_cast<int>(options.size()))];
    if (step == Step::Trr) {
      std::vector<int> pivots;
      for (int i = 0; i < n; ++i)
        if (ins[i].u >= 1) pivots.push_back(i);
      pivot = pivots[strategy->pick(static_cast<int>(pivots.size()))];
      std::vector<int> rest;
      for (int i = 0; i < n; ++i)
        if (i != pivot) rest.push_back(i);
      const int a = strategy->pick(static_cast<int>(rest.size()));
      int b = strategy->pick(static_cast<int>(rest.size()) - 1);
      if (b >= a) ++b;
      sj = rest[a];
      sk = rest[b];
    }
  }

  Rational value;
  switch (step) {
    case Step::Puncture:
      value = weighted_sum(puncture_reduce(corr), cache, strategy);
      break;
    case Step::Dilaton: {
      const WeightedTerm t = dilaton_reduce(corr);
      if (!t.coeff.is_zero()) value = t.coeff * eval_descendant(t.corr, cache, strategy);
      break;
    }
    case Step::DivisorStrip:
      value = weighted_sum(divisor_reduce(corr), cache, strategy);
      break;
    case Step::Gw: {
      GwQuery q;
      q.r = r;
      q.d = d;
      for (const Insertion& i : ins) q.codims.push_back(i.c);
      value = gw_invariant(q, cache, strategy);
      break;
    }
    case Step::Trr:
      value = product_sum(trr_reduce(corr, pivot, sj, sk), cache, strategy);
      break;
    case Step::Lift:
      value = weighted_sum(divisor_lift(corr), cache, strategy);
      break;
  }
  cache.insert(key, value);
  return value;
}

}  // namespace charnum
