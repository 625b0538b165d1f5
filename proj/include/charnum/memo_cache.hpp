#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "charnum/correlator.hpp"
#include "charnum/rational.hpp"

namespace charnum {

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical-key -> exact value store shared by all evaluators.
///
/// Inserts are idempotent: the same key always carries the same value, so a
/// duplicate insert is a no-op (and a value mismatch is a consistency bug).
/// Persistable as a line-based text file: one header line, then one sorted
/// record "r;d;u:m:c,...;num/den" per line.
class MemoCache {
 public:
  static constexpr std::string_view kHeader = "charnum-cache v1";

  /// Returns nullptr when absent.  Counts hits and misses.
  const Rational* lookup(const CanonicalKey& key);

  void insert(const CanonicalKey& key, const Rational& value);

  std::size_t size() const { return entries_.size(); }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  void reset_counters() { hits_ = misses_ = 0; }

  /// Records sorted by key for diff-stability.
  void save(std::ostream& out) const;

  /// Merges records into this cache.  Throws CacheFormatError on a bad
  /// header, malformed record, non-reduced value, or conflicting duplicate.
  void load(std::istream& in);

 private:
  std::unordered_map<std::string, Rational> entries_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

}  // namespace charnum
