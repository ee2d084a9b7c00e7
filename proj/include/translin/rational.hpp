// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace translin {

/// Exact arbitrary-precision rational, always in canonical form
/// (gcd(|num|, den) = 1, den > 0). The only numeric type in the solver core.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }
  /// Accepts "p", "p/q" and decimal strings like "-2.75".
  explicit Rational(const std::string& s);

  static Rational from_decimal_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  /// Division by zero is a programming error; throws std::domain_error.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { v_ += o.v_; canonicalize(); return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; canonicalize(); return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; canonicalize(); return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Largest integer <= value.
  mpz_class floor() const;
  /// Smallest integer >= value.
  mpz_class ceil() const;
  /// Rounding toward zero.
  mpz_class trunc() const;

  /// q^e for e >= 0.
  Rational pow(unsigned long e) const;

  /// "p/q" or "p"; the canonical text form (also used by the parser).
  std::string str() const;

  size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  void canonicalize() { v_.canonicalize(); }
  mpq_class v_;
};

/// n! as an exact integer rational.
Rational factorial(unsigned long n);

/// Best rational approximation of q among all rationals with denominator
/// <= max_denominator (a continued-fraction convergent or semiconvergent).
/// Returns q itself if its denominator already complies.
Rational cf_approx(const Rational& q, const mpz_class& max_denominator);

}  // namespace translin
