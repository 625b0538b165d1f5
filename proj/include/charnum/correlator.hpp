#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charnum/rational.hpp"

namespace charnum {

/// A query violating the domain preconditions: invalid correlator data,
/// unstable moduli space, dimension-gate failure.
class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure (e.g. a characteristic number that came out
/// non-integral).  Indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent triple at one marked point: u on the usual psi class, m on the
/// modified psi class, c on the evaluation (hyperplane) class.
struct Insertion {
  int u = 0;
  int m = 0;
  int c = 0;

  friend constexpr auto operator<=>(const Insertion&, const Insertion&) = default;
};

/// dim M_{0,n}(P^r, d) = rd + r + d - 3 + n.  n = 0 is the unmarked space,
/// allowed for d >= 1; degree 0 requires n >= 3.
int dimension(int r, int d, int n);

/// The bracket <prod_i tau_{u_i}^{m_i}(c_i)>_d on target P^r.
///
/// Insertion order is preserved for reporting; values depend only on the
/// multiset of insertions (evaluation always goes through the canonical key).
class Correlator {
 public:
  /// Throws InvalidQuery unless r >= 1, d >= 0, n >= 1, all exponents >= 0,
  /// n >= 3 when d = 0, and d > 0 whenever some m > 0 (the modified psi
  /// classes exist only on positive-degree spaces).
  Correlator(int r, int d, std::vector<Insertion> insertions);

  int r() const { return r_; }
  int d() const { return d_; }
  int n() const { return static_cast<int>(insertions_.size()); }
  const std::vector<Insertion>& insertions() const { return insertions_; }

  /// Copy with insertions sorted; the form all evaluators work on.
  Correlator canonicalized() const;

 private:
  int r_;
  int d_;
  std::vector<Insertion> insertions_;
};

/// Total codimension of the integrand: sum of u_i + m_i + c_i.
int codimension(const Correlator& corr);

/// True iff the integrand codimension equals the moduli dimension.  Only top
/// correlators can have a nonzero value.
bool is_top(const Correlator& corr);

/// Permutation-invariant identity of a correlator, usable as a cache key and
/// as the record key of the cache file.  Encoding: "r;d;u:m:c,u:m:c,..." with
/// the triples sorted.
class CanonicalKey {
 public:
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& bytes() const { return bytes_; }

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) { return a.bytes_ == b.bytes_; }

 private:
  std::string bytes_;
};

CanonicalKey canonical_key(const Correlator& corr);

/// Integral of prod psi_i^{u_i} over the Knudsen-Mumford space M_{0,n}:
/// (n-3)!/prod(u_i!) when sum u_i = n-3, otherwise 0.  Requires n >= 3.
Rational km_integral(std::span<const int> psi_exponents);

/// Closed form on M_{0,n}(P^r, 0) = M_{0,n} x P^r: the KM psi integral when
/// sum c_i = r, otherwise 0.  Requires d = 0.
Rational degree_zero_value(const Correlator& corr);

}  // namespace charnum
