#include "charnum/rational.hpp"

#include <mutex>
#include <vector>

namespace charnum {

const Integer& factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<Integer> table{1, 1};
  std::scoped_lock lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

Integer multinomial(std::span<const int> parts) {
  long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
  }
  Integer result = factorial(static_cast<unsigned>(total));
  for (int p : parts) {
    if (p > 1) mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), factorial(static_cast<unsigned>(p)).get_mpz_t());
  }
  return result;
}

Integer int_pow(const Integer& base, unsigned exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw std::logic_error("Rational: " + str() + " is not an integer");
  return num();
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace charnum
