#include "charnum/parser.hpp"

#include <cctype>

namespace charnum {
namespace {

constexpr long kMaxInt = 1000000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume(char ch) {
    if (done() || peek() != ch) return false;
    ++pos_;
    return true;
  }

  void expect(char ch, const char* what) {
    if (!consume(ch)) throw ParseError(pos_, std::string("expected '") + ch + "' " + what);
  }

  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  long integer(const char* what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, std::string("expected a nonnegative integer for ") + what);
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxInt) throw ParseError(pos_, std::string("integer too large for ") + what);
      ++pos_;
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Insertion> parse_insertions(std::string_view text) {
  Cursor cur(text);
  std::vector<Insertion> insertions;

  cur.skip_ws();
  if (cur.done()) throw ParseError(cur.pos(), "empty correlator (expected at least one term)");
  while (!cur.done()) {
    if (!cur.consume_word("tau")) throw ParseError(cur.pos(), "expected 'tau'");
    cur.expect('[', "after 'tau'");

    Insertion ins;
    bool seen_u = false, seen_m = false, seen_c = false;
    while (true) {
      const std::size_t field_pos = cur.pos();
      if (cur.done()) throw ParseError(field_pos, "expected a field 'u', 'm' or 'c'");
      const char field = cur.peek();
      if (field != 'u' && field != 'm' && field != 'c')
        throw ParseError(field_pos, "expected a field 'u', 'm' or 'c'");
      bool& seen = field == 'u' ? seen_u : field == 'm' ? seen_m : seen_c;
      if (seen) throw ParseError(field_pos, std::string("duplicate field '") + field + "'");
      seen = true;
      cur.consume(field);
      cur.expect('=', "after the field name");
      const long value = cur.integer("the field value");
      (field == 'u' ? ins.u : field == 'm' ? ins.m : ins.c) = static_cast<int>(value);
      if (cur.consume(',')) continue;
      cur.expect(']', "to close the term");
      break;
    }

    long repeat = 1;
    if (cur.consume('^')) {
      const std::size_t count_pos = cur.pos();
      repeat = cur.integer("the repetition count");
      if (repeat == 0) throw ParseError(count_pos, "repetition count must be >= 1");
    }
    insertions.insert(insertions.end(), static_cast<std::size_t>(repeat), ins);
    if (static_cast<long>(insertions.size()) > kMaxInt)
      throw ParseError(cur.pos(), "correlator has too many marks");

    const std::size_t after_term = cur.pos();
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.pos() == after_term)
      throw ParseError(after_term, "expected whitespace between terms");
  }
  return insertions;
}

Correlator parse_correlator(std::string_view text, int r, int d) {
  return Correlator(r, d, parse_insertions(text));
}

}  // namespace charnum
