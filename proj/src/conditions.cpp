#include "charnum/conditions.hpp"

#include <string>

#include "charnum/twisted.hpp"

namespace charnum {

ConditionSpec incidence(int k) { return {false, k}; }
ConditionSpec tangency(int k) { return {true, k}; }

CharnumQuery plane_curve_query(int degree, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidQuery("plane_curve_query: negative condition count");
  CharnumQuery q;
  q.r = 2;
  q.d = degree;
  q.conditions.insert(q.conditions.end(), a, incidence(2));
  q.conditions.insert(q.conditions.end(), b, tangency(0));
  q.conditions.insert(q.conditions.end(), c, tangency(1));
  return q;
}

CharnumQuery twisted_cubic_query(int a, int b, int c, int d, int e) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0)
    throw InvalidQuery("twisted_cubic_query: negative condition count");
  CharnumQuery q;
  q.r = 3;
  q.d = 3;
  q.conditions.insert(q.conditions.end(), a, incidence(2));
  q.conditions.insert(q.conditions.end(), b, tangency(0));
  q.conditions.insert(q.conditions.end(), c, incidence(3));
  q.conditions.insert(q.conditions.end(), d, tangency(1));
  q.conditions.insert(q.conditions.end(), e, tangency(2));
  return q;
}

std::vector<Insertion> phi_expand(int k, int r) {
  if (r < 1) throw InvalidQuery("phi_expand: target dimension r must be >= 1");
  if (k < 0 || k >= r)
    throw InvalidQuery("phi_expand: tangency flag codimension must lie in [0, r-1]");
  std::vector<Insertion> terms;
  if (k + 2 <= r) terms.push_back({0, 0, k + 2});
  terms.push_back({0, 1, k + 1});
  return terms;
}

namespace {

int condition_codim(const ConditionSpec& c) { return c.tangent ? c.k + 2 : c.k; }

void validate(const CharnumQuery& q) {
  if (q.r < 1) throw InvalidQuery("characteristic number: target dimension r must be >= 1");
  if (q.d < 0) throw InvalidQuery("characteristic number: degree must be >= 0");
  if (q.conditions.empty()) throw InvalidQuery("characteristic number: no conditions given");
  bool any_tangent = false;
  for (const ConditionSpec& c : q.conditions) {
    if (c.tangent) {
      any_tangent = true;
      if (c.k < 0 || c.k >= q.r)
        throw InvalidQuery("characteristic number: tangency flag codimension must lie in [0, r-1]");
    } else {
      if (c.k < 1 || c.k > q.r)
        throw InvalidQuery("characteristic number: incidence codimension must lie in [1, r]");
    }
  }
  if (any_tangent && q.d < 2)
    throw InvalidQuery("characteristic number: tangency conditions require degree >= 2");
}

}  // namespace

bool enumerative_hypotheses(const CharnumQuery& q) {
  bool any_tangent = false;
  for (const ConditionSpec& c : q.conditions) any_tangent = any_tangent || c.tangent;
  if (!any_tangent) return true;
  return q.r >= 2 && q.d >= 2;
}

std::vector<Correlator> build_correlators(const CharnumQuery& q) {
  validate(q);
  const int n = static_cast<int>(q.conditions.size());
  int have = 0;
  for (const ConditionSpec& c : q.conditions) have += condition_codim(c);
  const int need = dimension(q.r, q.d, n);
  if (have != need)
    throw InvalidQuery("not a finite count: conditions have total codimension " +
                       std::to_string(have) + " but the moduli space has dimension " +
                       std::to_string(need));

  // One insertion choice per condition; tangencies contribute two.
  std::vector<std::vector<Insertion>> choices;
  choices.reserve(q.conditions.size());
  for (const ConditionSpec& c : q.conditions) {
    if (c.tangent)
      choices.push_back(phi_expand(c.k, q.r));
    else
      choices.push_back({Insertion{0, 0, c.k}});
  }

  std::vector<Correlator> out;
  std::vector<Insertion> current(choices.size());
  auto expand = [&](auto&& self, std::size_t idx) -> void {
    if (idx == choices.size()) {
      out.emplace_back(q.r, q.d, current);
      return;
    }
    for (const Insertion& pick : choices[idx]) {
      current[idx] = pick;
      self(self, idx + 1);
    }
  };
  expand(expand, 0);
  return out;
}

Integer characteristic_number(const CharnumQuery& q, MemoCache& cache, EvalStrategy* strategy) {
  Rational total;
  for (const Correlator& corr : build_correlators(q)) total += eval_twisted(corr, cache, strategy);
  if (!total.is_integer() || total.is_negative())
    throw ConsistencyError("characteristic number came out as " + total.str() +
                           "; expected a nonnegative integer");
  return total.to_integer();
}

TableName table_by_name(const std::string& name) {
  if (name == "planes-points") return TableName::PlanesPoints;
  if (name == "planes-lines") return TableName::PlanesLines;
  if (name == "tangency-mix") return TableName::TangencyMix;
  throw InvalidQuery("unknown table \"" + name +
                     "\" (expected planes-points, planes-lines or tangency-mix)");
}

TableGrid table(TableName name, MemoCache& cache) {
  TableGrid grid;
  switch (name) {
    case TableName::PlanesPoints: {
      // N_3(0, b, c, 0, e) with b = 12 - 3e - 2c.
      grid.name = "planes-points";
      grid.row_symbol = "c";
      grid.col_symbol = "e";
      grid.constraint = "b=12-3e-2c";
      grid.col_labels = {0, 1, 2, 3, 4};
      for (int c = 0; c <= 6; ++c) {
        std::vector<Integer> row;
        for (int e = 0; e <= 4; ++e) {
          const int b = 12 - 3 * e - 2 * c;
          if (b < 0) break;
          row.push_back(characteristic_number(twisted_cubic_query(0, b, c, 0, e), cache));
        }
        if (row.empty()) break;
        grid.row_labels.push_back(c);
        grid.rows.push_back(std::move(row));
      }
      break;
    }
    case TableName::PlanesLines: {
      // N_3(a, b, 0, d, 0) with a = 12 - 2d - b.
      grid.name = "planes-lines";
      grid.row_symbol = "b";
      grid.col_symbol = "d";
      grid.constraint = "a=12-2d-b";
      grid.col_labels = {0, 1, 2, 3, 4, 5, 6};
      for (int b = 0; b <= 12; ++b) {
        std::vector<Integer> row;
        for (int d = 0; d <= 6; ++d) {
          const int a = 12 - 2 * d - b;
          if (a < 0) break;
          row.push_back(characteristic_number(twisted_cubic_query(a, b, 0, d, 0), cache));
        }
        if (row.empty()) break;
        grid.row_labels.push_back(b);
        grid.rows.push_back(std::move(row));
      }
      break;
    }
    case TableName::TangencyMix: {
      // N_3(0, b, 0, d, e) with b = 12 - 3e - 2d.
      grid.name = "tangency-mix";
      grid.row_symbol = "d";
      grid.col_symbol = "e";
      grid.constraint = "b=12-3e-2d";
      grid.col_labels = {0, 1, 2, 3, 4};
      for (int d = 0; d <= 6; ++d) {
        std::vector<Integer> row;
        for (int e = 0; e <= 4; ++e) {
          const int b = 12 - 3 * e - 2 * d;
          if (b < 0) break;
          row.push_back(characteristic_number(twisted_cubic_query(0, b, 0, d, e), cache));
        }
        if (row.empty()) break;
        grid.row_labels.push_back(d);
        grid.rows.push_back(std::move(row));
      }
      break;
    }
  }
  return grid;
}

}  // namespace charnum
