#pragma once

#include <string>
#include <vector>

#include "charnum/correlator.hpp"
#include "charnum/memo_cache.hpp"
#include "charnum/rational.hpp"
#include "charnum/strategy.hpp"

namespace charnum {

/// One enumerative condition, consuming one mark.
///
/// Incidence: the curve meets a general linear subspace of codimension k in
/// P^r (class eta^k, 1 <= k <= r).  Tangency: the curve is tangent to a
/// general hyperplane H at a specified linear subspace of codimension k in H
/// (class Phi * eta^k, 0 <= k <= r-1, where Phi = eta(eta + psi_bar) is the
/// pointed tangency class).
struct ConditionSpec {
  bool tangent = false;
  int k = 0;
};

ConditionSpec incidence(int k);
ConditionSpec tangency(int k);

struct CharnumQuery {
  int r = 0;
  int d = 0;
  std::vector<ConditionSpec> conditions;
};

/// P^2, N_d(a, b, c): degree-d rational plane curves through a points,
/// tangent to b lines, tangent to c lines at specified points.
CharnumQuery plane_curve_query(int degree, int a, int b, int c = 0);

/// P^3 twisted cubics, N_3(a, b, c, d, e): incident to a lines, tangent to b
/// planes, through c points, tangent to d planes at specified lines, tangent
/// to e planes at specified points.
CharnumQuery twisted_cubic_query(int a, int b, int c, int d, int e);

/// The insertions of Phi * eta^k = eta^{k+2} + eta^{k+1} psi_bar, with the
/// pure eta term dropped when k + 2 > r.  Requires 0 <= k <= r-1.
std::vector<Insertion> phi_expand(int k, int r);

/// One mark per condition; tangency marks distribute over the two Phi terms,
/// giving up to 2^(#tangencies) correlators whose values sum to the count.
/// Throws InvalidQuery when the total condition codimension does not match
/// the moduli dimension, or when a tangency appears at degree < 2.
std::vector<Correlator> build_correlators(const CharnumQuery& q);

/// The characteristic number: the sum of the expansion, checked to be a
/// nonnegative integer.
Integer characteristic_number(const CharnumQuery& q, MemoCache& cache,
                              EvalStrategy* strategy = nullptr);

/// True when the count is backed by the transversality statement
/// (r >= 2, and d >= 2 whenever a tangency is present); outside of that the
/// value is still a well-defined intersection number.
bool enumerative_hypotheses(const CharnumQuery& q);

enum class TableName { PlanesPoints, PlanesLines, TangencyMix };

TableName table_by_name(const std::string& name);

/// A triangular grid of twisted-cubic characteristic numbers.
struct TableGrid {
  std::string name;
  std::string row_symbol;
  std::string col_symbol;
  std::string constraint;
  std::vector<int> row_labels;
  std::vector<int> col_labels;
  std::vector<std::vector<Integer>> rows;  // rows[i] may be shorter than col_labels
};

TableGrid table(TableName name, MemoCache& cache);

}  // namespace charnum
