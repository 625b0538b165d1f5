#include "charnum/correlator.hpp"

#include <algorithm>
#include <cassert>

namespace charnum {

int dimension(int r, int d, int n) {
  if (r < 1) throw InvalidQuery("dimension: target dimension r must be >= 1");
  if (d < 0) throw InvalidQuery("dimension: degree must be >= 0");
  if (n < 0) throw InvalidQuery("dimension: mark count must be >= 0");
  if (d == 0 && n < 3) throw InvalidQuery("dimension: degree-0 spaces need at least 3 marks");
  return r * d + r + d - 3 + n;
}

Correlator::Correlator(int r, int d, std::vector<Insertion> insertions)
    : r_(r), d_(d), insertions_(std::move(insertions)) {
  if (r_ < 1) throw InvalidQuery("correlator: target dimension r must be >= 1");
  if (d_ < 0) throw InvalidQuery("correlator: degree must be >= 0");
  if (insertions_.empty()) throw InvalidQuery("correlator: at least one mark required");
  if (d_ == 0 && n() < 3) throw InvalidQuery("correlator: degree 0 requires at least 3 marks");
  for (const Insertion& ins : insertions_) {
    if (ins.u < 0 || ins.m < 0 || ins.c < 0) throw InvalidQuery("correlator: negative exponent");
    if (ins.m > 0 && d_ == 0)
      throw InvalidQuery("correlator: modified psi classes are undefined on degree-0 spaces");
  }
}

Correlator Correlator::canonicalized() const {
  Correlator out = *this;
  std::sort(out.insertions_.begin(), out.insertions_.end());
  return out;
}

int codimension(const Correlator& corr) {
  int total = 0;
  for (const Insertion& ins : corr.insertions()) total += ins.u + ins.m + ins.c;
  return total;
}

bool is_top(const Correlator& corr) {
  return codimension(corr) == dimension(corr.r(), corr.d(), corr.n());
}

CanonicalKey canonical_key(const Correlator& corr) {
  const Correlator sorted = corr.canonicalized();
  std::string bytes;
  bytes.reserve(8 + 8 * sorted.insertions().size());
  bytes += std::to_string(sorted.r());
  bytes += ';';
  bytes += std::to_string(sorted.d());
  bytes += ';';
  bool first = true;
  for (const Insertion& ins : sorted.insertions()) {
    if (!first) bytes += ',';
    first = false;
    bytes += std::to_string(ins.u);
    bytes += ':';
    bytes += std::to_string(ins.m);
    bytes += ':';
    bytes += std::to_string(ins.c);
  }
  return CanonicalKey(std::move(bytes));
}

Rational km_integral(std::span<const int> psi_exponents) {
  const int n = static_cast<int>(psi_exponents.size());
  if (n < 3) throw InvalidQuery("km_integral: M_{0,n} needs n >= 3");
  long total = 0;
  for (int u : psi_exponents) {
    if (u < 0) throw InvalidQuery("km_integral: negative psi exponent");
    total += u;
  }
  if (total != n - 3) return Rational();
  return Rational(multinomial(psi_exponents));
}

Rational degree_zero_value(const Correlator& corr) {
  if (corr.d() != 0) throw InvalidQuery("degree_zero_value: degree must be 0");
  int eta_total = 0;
  std::vector<int> us;
  us.reserve(corr.insertions().size());
  for (const Insertion& ins : corr.insertions()) {
    assert(ins.m == 0);  // guaranteed by the correlator invariants
    eta_total += ins.c;
    us.push_back(ins.u);
  }
  if (eta_total != corr.r()) return Rational();
  return km_integral(us);
}

}  // namespace charnum
