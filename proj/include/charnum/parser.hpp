#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "charnum/correlator.hpp"

namespace charnum {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the correlator surface syntax
///
///   correlator := term (WS term)*
///   term       := "tau" "[" fields "]" ("^" INT)?
///   fields     := field ("," field)*
///   field      := ("u" | "m" | "c") "=" INT
///
/// Omitted fields default to 0, "^k" repeats the insertion k times (k >= 1),
/// and INT is a plain nonnegative decimal.  Throws ParseError with the byte
/// offset of the offending character.
std::vector<Insertion> parse_insertions(std::string_view text);

/// Convenience wrapper attaching the ambient space.  Correlator invariant
/// violations surface as InvalidQuery, not ParseError.
Correlator parse_correlator(std::string_view text, int r, int d);

}  // namespace charnum
