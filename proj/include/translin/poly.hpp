// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "translin/interval.hpp"
#include "translin/rational.hpp"
#include "translin/term.hpp"

namespace translin {

/// Dense univariate polynomial with exact rational coefficients
/// (coefficient index = degree, trailing zeros trimmed).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& c) { return Poly({c}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly scaled(const Rational& k) const;
  Poly plus_constant(const Rational& k) const;

  /// Exact range enclosure of the polynomial over [lo, hi] by interval
  /// Horner evaluation.
  void range_on(const Rational& lo, const Rational& hi, Rational& out_lo, Rational& out_hi) const;

  /// The polynomial as a term in `x` (used only for lines; lemmas stay linear).
  TermPtr to_term(const TermPtr& x) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Maclaurin truncation of exp: sum_{i<=n} x^i / i!.
Poly exp_taylor(unsigned n);
/// Maclaurin truncation of sin: sum_{k<=n} (-1)^k x^(2k+1) / (2k+1)!.
Poly sin_taylor(unsigned n);
/// Remainder-bound monomial for sin at truncation n: x^(2(n+1)) / (2(n+1))!.
Poly sin_remainder_bound(unsigned n);

}  // namespace translin
