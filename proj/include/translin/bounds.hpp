// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "translin/interval.hpp"
#include "translin/poly.hpp"

namespace translin {

/// Which member of a PolyPair a tangent/secant is drawn on.
enum class Side { Lower, Upper };

/// Lower/upper polynomials certifying tf within a width-eps window at a point.
struct PolyPair {
  TransFn fn;       // Exp or Sin
  Poly lower;       // P_l(x) <= tf(x) on its validity region
  Poly upper;       // P_u(x) >= tf(x) on its validity region
  Rational center;  // c
  Rational eps;
  unsigned n = 0;        // truncation parameter actually used
  bool exp_scaled = false;  // upper is T_n * (1 - c^(n+1)/(n+1)!)^-1

  Rational lower_at_center() const { return lower.eval(center); }
  Rational upper_at_center() const { return upper.eval(center); }
  Rational width() const { return upper_at_center() - lower_at_center(); }
  bool exact_point() const { return width().is_zero(); }

  const Poly& side_poly(Side s) const { return s == Side::Lower ? lower : upper; }
};

/// Certified rational window for tf at c with width <= eps.
/// For sin the Maclaurin remainder bound is globally valid; for exp the three
/// sign cases of the truncation are used. Exact only at c = 0.
PolyPair poly_approx(TransFn fn, const Rational& c, const Rational& eps);

struct PiBounds {
  Rational lo;  // l_pi
  Rational hi;  // u_pi
};

struct Concavity {
  bool pi_uncertain = false;
  int sign = 0;  // meaningful when !pi_uncertain
  static Concavity uncertain() { return {true, 0}; }
  static Concavity of(int s) { return {false, s}; }
};

/// exp is convex everywhere; sin's concavity on the base period is the
/// opposite of the argument sign, undecidable while |c| exceeds the certified
/// lower bound of pi.
Concavity get_concavity(TransFn fn, const Rational& c, const PiBounds& pi);

/// An interval around the center on which the tangent of the selected
/// polynomial is certified not to cross tf. Empty optional = degenerate
/// (caller falls back to point refinement).
std::optional<Interval> get_tangent_bounds(TransFn fn, const PolyPair& pair, Side side,
                                           const PiBounds& pi);

/// True when evaluating the pair's polynomial of `side` at point p is
/// certified on the safe side of tf (see the per-case validity regions).
bool pair_safe_at(const PolyPair& pair, Side side, const Rational& p);

/// Sound enclosure of tf(c) for the universal check; takes the poly_approx
/// route when practical and falls back to coarse-but-sound bounds for very
/// large arguments (where the width promise is forfeited).
void cert_enclosure(TransFn fn, const Rational& c, const Rational& eps, Rational& lb, Rational& ub);

}  // namespace translin
