#pragma once
#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace coupler {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin shell over GMP's mpq_class adding checked division,
// checked inversion and the text form used across the toolkit
// ("-3/4", "7", "0").
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class q);

  // "[sign]digits[/digits]"; throws Error on malformed text or zero denominator.
  static Rational parse(std::string_view text);
  // Exact value of a finite double (dyadic); throws Error on NaN/infinity.
  static Rational from_double(double x);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const;
  Rational abs() const;
  Rational inverse() const;  // throws Error on zero

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws Error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) >= 0;
  }

  std::string str() const;
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

}  // namespace coupler
