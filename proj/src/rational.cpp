// SPDX-License-Identifier: Apache-2.0
#include "translin/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace translin {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  canonicalize();
}

Rational::Rational(const std::string& s) {
  if (s.find('.') != std::string::npos) {
    *this = from_decimal_string(s);
    return;
  }
  v_ = mpq_class(s);
  if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  canonicalize();
}

Rational Rational::from_decimal_string(const std::string& s) {
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  size_t frac_len = 0;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal: " + s);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_len;
    } else {
      throw std::invalid_argument("bad decimal literal: " + s);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class num(digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return Rational(q);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::trunc() const {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::pow(unsigned long e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return v_.get_str(); }

size_t Rational::hash() const { return std::hash<std::string>{}(str()); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational cf_approx(const Rational& q, const mpz_class& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("cf_approx: max_denominator must be >= 1");
  if (q.denominator() <= max_denominator) return q;

  // Continued-fraction expansion of q with convergents h_n/k_n built by the
  // standard recurrence. The best approximation with denominator <= N is the
  // last convergent with k <= N or the best semiconvergent past it; both
  // candidates are compared exactly.
  mpz_class hm2 = 0, km2 = 1;  // h_{-2}/k_{-2}
  mpz_class hm1 = 1, km1 = 0;  // h_{-1}/k_{-1}
  mpz_class num = q.numerator(), den = q.denominator();
  while (true) {
    mpz_class a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h = a * hm1 + hm2;
    mpz_class k = a * km1 + km2;
    if (k > max_denominator) {
      // Only reachable past the first convergent (k_0 = 1 <= N), so km1 >= 1.
      Rational conv(mpq_class(hm1, km1));
      Rational best = conv;
      Rational best_err = (conv - q).abs();
      mpz_class t = (max_denominator - km2) / km1;
      if (t >= 1) {
        Rational semi(mpq_class(hm2 + t * hm1, km2 + t * km1));
        Rational err = (semi - q).abs();
        if (err < best_err) best = semi;
      }
      return best;
    }
    hm2 = hm1; km2 = km1;
    hm1 = h; km1 = k;
    if (rem == 0) return Rational(mpq_class(h, k));
    num = den;
    den = rem;
  }
}

}  // namespace translin
