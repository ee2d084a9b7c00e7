// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <stdexcept>

namespace translin::oracle {

namespace {

Rational pow10_inv(unsigned digits) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, digits);
  return Rational(1) / Rational(mpq_class(d));
}

// exp(c) for c >= 0: partial sum plus a geometric tail bound.
void exp_nonneg(const Rational& c, const Rational& target, Rational& lo, Rational& hi) {
  Rational sum(1);
  Rational term(1);
  unsigned k = 0;
  while (true) {
    ++k;
    term = term * c / Rational(static_cast<long>(k));
    sum += term;
    // Tail after k terms is < 2 * next term once the ratio c/(k+1) <= 1/2.
    Rational next = term * c / Rational(static_cast<long>(k + 1));
    if (Rational(2) * c <= Rational(static_cast<long>(k + 1)) && Rational(2) * next <= target) {
      lo = sum;
      hi = sum + Rational(2) * next;
      return;
    }
    if (k > 100000) throw std::runtime_error("oracle exp did not converge");
  }
}

}  // namespace

void enclose(TransFn fn, const Rational& c, unsigned digits, Rational& lo, Rational& hi) {
  Rational target = pow10_inv(digits);
  if (fn == TransFn::Exp) {
    if (c.is_zero()) {
      lo = hi = Rational(1);
      return;
    }
    if (c.sign() > 0) {
      exp_nonneg(c, target, lo, hi);
      return;
    }
    // exp(c) = 1 / exp(-c); invert an enclosure with a tightened target.
    Rational ilo, ihi;
    exp_nonneg(-c, target, ilo, ihi);
    lo = Rational(1) / ihi;
    hi = Rational(1) / ilo;
    return;
  }
  if (fn != TransFn::Sin) throw std::invalid_argument("oracle: unsupported function");
  if (c.is_zero()) {
    lo = hi = Rational(0);
    return;
  }
  Rational sum = c;
  Rational term = c;
  Rational c2 = c * c;
  unsigned k = 0;
  while (true) {
    ++k;
    term = term * c2 / Rational(static_cast<long>(2 * k)) / Rational(static_cast<long>(2 * k + 1));
    sum += (k % 2 == 0) ? term : -term;
    Rational next_abs =
        (term.abs() * c2) / Rational(static_cast<long>(2 * k + 2)) / Rational(static_cast<long>(2 * k + 3));
    if (c2 * Rational(2) <= Rational(static_cast<long>(2 * k + 4)) * Rational(static_cast<long>(2 * k + 5)) &&
        Rational(2) * next_abs <= target) {
      lo = sum - Rational(2) * next_abs;
      hi = sum + Rational(2) * next_abs;
      return;
    }
    if (k > 100000) throw std::runtime_error("oracle sin did not converge");
  }
}

void pi_enclosure(Rational& lo, Rational& hi) {
  // 110 decimal digits of pi.
  static const char* kDigits =
      "3."
      "1415926535897932384626433832795028841971693993751058209749445923078164"
      "062862089986280348253421170679821480865132";
  Rational ref = Rational::from_decimal_string(kDigits);
  Rational ulp = pow10_inv(108);
  lo = ref - ulp;
  hi = ref + ulp;
}

}  // namespace translin::oracle
