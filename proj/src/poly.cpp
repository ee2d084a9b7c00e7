// SPDX-License-Identifier: Apache-2.0
#include "translin/poly.hpp"

namespace translin {

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rational& k) const {
  std::vector<Rational> d;
  d.reserve(c_.size());
  for (const auto& ci : c_) d.push_back(ci * k);
  return Poly(std::move(d));
}

Poly Poly::plus_constant(const Rational& k) const {
  std::vector<Rational> d = c_;
  if (d.empty()) d.push_back(k);
  else d[0] += k;
  return Poly(std::move(d));
}

void Poly::range_on(const Rational& lo, const Rational& hi, Rational& out_lo, Rational& out_hi) const {
  // Interval Horner: acc = acc*[lo,hi] + c_i with exact endpoints.
  Rational alo(0), ahi(0);
  for (size_t i = c_.size(); i-- > 0;) {
    Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
    Rational mn = p1, mx = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
      if (*p < mn) mn = *p;
      if (*p > mx) mx = *p;
    }
    alo = mn + c_[i];
    ahi = mx + c_[i];
  }
  out_lo = alo;
  out_hi = ahi;
}

TermPtr Poly::to_term(const TermPtr& x) const {
  if (c_.empty()) return Term::constant(Rational(0));
  std::vector<TermPtr> parts;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero() && c_.size() > 1) continue;
    if (i == 0) {
      parts.push_back(Term::constant(c_[i]));
    } else {
      TermPtr mono = x;
      for (size_t j = 1; j < i; ++j) mono = Term::product(mono, x);
      parts.push_back(Term::scaled(c_[i], mono));
    }
  }
  return Term::sum(std::move(parts));
}

Poly exp_taylor(unsigned n) {
  std::vector<Rational> c;
  c.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) c.push_back(Rational(1) / factorial(i));
  return Poly(std::move(c));
}

Poly sin_taylor(unsigned n) {
  std::vector<Rational> c(2 * n + 2, Rational(0));
  for (unsigned k = 0; k <= n; ++k) {
    Rational coeff = Rational(1) / factorial(2 * k + 1);
    c[2 * k + 1] = (k % 2 == 0) ? coeff : -coeff;
  }
  return Poly(std::move(c));
}

Poly sin_remainder_bound(unsigned n) {
  unsigned d = 2 * (n + 1);
  std::vector<Rational> c(d + 1, Rational(0));
  c[d] = Rational(1) / factorial(d);
  return Poly(std::move(c));
}

}  // namespace translin
