#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>

namespace charnum {

using Integer = mpz_class;

/// n!, arbitrary precision, memoized up to the largest n seen so far.
const Integer& factorial(unsigned n);

/// (sum parts)! / prod(parts[i]!) as an exact integer.
Integer multinomial(std::span<const int> parts);

Integer int_pow(const Integer& base, unsigned exp);

/// Exact rational number.  Always in lowest terms, denominator > 0.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(static_cast<signed long>(v)) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Throws std::logic_error when the value is not an integer.
  Integer to_integer() const;

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  Rational operator-() const {
    Rational out;
    out.q_ = -q_;
    return out;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

}  // namespace charnum
