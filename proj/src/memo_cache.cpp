#include "charnum/memo_cache.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace charnum {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

// Key format: r;d;u:m:c,u:m:c,...  with nonnegative decimal fields and the
// triples sorted.  Checked on load so corrupted files are rejected early.
bool valid_key(std::string_view key) {
  const auto sep1 = key.find(';');
  if (sep1 == std::string_view::npos) return false;
  const auto sep2 = key.find(';', sep1 + 1);
  if (sep2 == std::string_view::npos) return false;
  if (!all_digits(key.substr(0, sep1))) return false;
  if (!all_digits(key.substr(sep1 + 1, sep2 - sep1 - 1))) return false;
  std::string_view triples = key.substr(sep2 + 1);
  std::string_view prev;
  while (!triples.empty()) {
    const auto comma = triples.find(',');
    std::string_view triple = triples.substr(0, comma);
    const auto c1 = triple.find(':');
    if (c1 == std::string_view::npos) return false;
    const auto c2 = triple.find(':', c1 + 1);
    if (c2 == std::string_view::npos) return false;
    if (!all_digits(triple.substr(0, c1)) || !all_digits(triple.substr(c1 + 1, c2 - c1 - 1)) ||
        !all_digits(triple.substr(c2 + 1)))
      return false;
    if (!prev.empty() && triple < prev) return false;  // records keep sorted triples
    prev = triple;
    if (comma == std::string_view::npos) break;
    triples.remove_prefix(comma + 1);
  }
  return true;
}

Rational parse_value(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num.empty() || den.empty()) throw CacheFormatError("cache: empty value field");
  try {
    Integer n(num), d(den);
    if (sgn(d) <= 0) throw CacheFormatError("cache: nonpositive denominator");
    Rational value(n, d);
    if (value.num() != n || value.den() != d)
      throw CacheFormatError("cache: value not in lowest terms: " + text);
    return value;
  } catch (const std::invalid_argument&) {
    throw CacheFormatError("cache: malformed value: " + text);
  }
}

}  // namespace

const Rational* MemoCache::lookup(const CanonicalKey& key) {
  auto it = entries_.find(key.bytes());
  if (it == entries_.end()) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  return &it->second;
}

void MemoCache::insert(const CanonicalKey& key, const Rational& value) {
  auto [it, inserted] = entries_.emplace(key.bytes(), value);
  if (!inserted) assert(it->second == value);
}

void MemoCache::save(std::ostream& out) const {
  std::vector<const std::pair<const std::string, Rational>*> records;
  records.reserve(entries_.size());
  for (const auto& entry : entries_) records.push_back(&entry);
  std::sort(records.begin(), records.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  out << kHeader << '\n';
  for (const auto* rec : records) {
    out << rec->first << ';' << rec->second.num().get_str() << '/' << rec->second.den().get_str()
        << '\n';
  }
}

void MemoCache::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw CacheFormatError("cache: unsupported format (expected header \"" +
                           std::string(kHeader) + "\")");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    // The value starts after the third ';'.
    std::size_t pos = std::string::npos;
    int seen = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == ';' && ++seen == 3) {
        pos = i;
        break;
      }
    }
    if (pos == std::string::npos)
      throw CacheFormatError("cache: malformed record at line " + std::to_string(lineno));
    const std::string key = line.substr(0, pos);
    if (!valid_key(key))
      throw CacheFormatError("cache: malformed key at line " + std::to_string(lineno));
    const Rational value = parse_value(line.substr(pos + 1));
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && !(it->second == value))
      throw CacheFormatError("cache: conflicting value for key " + key);
  }
}

}  // namespace charnum
