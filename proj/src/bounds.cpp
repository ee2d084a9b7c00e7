// SPDX-License-Identifier: Apache-2.0
#include "translin/bounds.hpp"

#include <stdexcept>

namespace translin {

namespace {

constexpr unsigned kDegreeCap = 400;

PolyPair exp_pair(const Rational& c, const Rational& eps) {
  PolyPair out;
  out.fn = TransFn::Exp;
  out.center = c;
  out.eps = eps;
  if (c.is_zero()) {
    out.lower = Poly::constant(Rational(1));
    out.upper = out.lower;
    out.n = 0;
    return out;
  }
  if (c.sign() < 0) {
    // T_n below, T_{n+1} above for odd n; width = |c|^(n+1)/(n+1)!
    for (unsigned n = 1; n <= kDegreeCap; n += 2) {
      Rational width = c.pow(n + 1) / factorial(n + 1);
      if (width <= eps) {
        out.lower = exp_taylor(n);
        out.upper = exp_taylor(n + 1);
        out.n = n;
        return out;
      }
    }
  } else {
    // T_n below; T_n * (1 - c^(n+1)/(n+1)!)^-1 above while the factor is positive.
    for (unsigned n = 1; n <= kDegreeCap; ++n) {
      Rational r = c.pow(n + 1) / factorial(n + 1);
      Rational f = Rational(1) - r;
      if (f.sign() <= 0) continue;
      Poly tn = exp_taylor(n);
      Rational tc = tn.eval(c);
      Rational width = tc / f - tc;
      if (width <= eps) {
        out.lower = tn;
        out.upper = tn.scaled(Rational(1) / f);
        out.n = n;
        out.exp_scaled = true;
        return out;
      }
    }
  }
  throw std::runtime_error("poly_approx(exp): degree cap exceeded");
}

PolyPair sin_pair(const Rational& c, const Rational& eps) {
  PolyPair out;
  out.fn = TransFn::Sin;
  out.center = c;
  out.eps = eps;
  for (unsigned n = 0; n <= kDegreeCap; ++n) {
    Poly rem = sin_remainder_bound(n);
    Rational width = rem.eval(c) * Rational(2);
    if (width <= eps) {
      Poly tn = sin_taylor(n);
      out.lower = Poly([&] {
        std::vector<Rational> cs = tn.coeffs();
        cs.resize(std::max(cs.size(), rem.coeffs().size()), Rational(0));
        for (size_t i = 0; i < rem.coeffs().size(); ++i) cs[i] -= rem.coeffs()[i];
        return cs;
      }());
      out.upper = Poly([&] {
        std::vector<Rational> cs = tn.coeffs();
        cs.resize(std::max(cs.size(), rem.coeffs().size()), Rational(0));
        for (size_t i = 0; i < rem.coeffs().size(); ++i) cs[i] += rem.coeffs()[i];
        return cs;
      }());
      out.n = n;
      return out;
    }
  }
  throw std::runtime_error("poly_approx(sin): degree cap exceeded");
}

}  // namespace

PolyPair poly_approx(TransFn fn, const Rational& c, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("poly_approx: eps must be positive");
  switch (fn) {
    case TransFn::Exp: return exp_pair(c, eps);
    case TransFn::Sin: return sin_pair(c, eps);
    default: throw std::invalid_argument("poly_approx: only exp and sin are supported");
  }
}

Concavity get_concavity(TransFn fn, const Rational& c, const PiBounds& pi) {
  if (fn == TransFn::Exp) return Concavity::of(+1);
  if (fn != TransFn::Sin) throw std::invalid_argument("get_concavity: only exp and sin");
  Rational a = c.abs();
  if (a <= pi.lo) return Concavity::of(-c.sign());
  // l_pi < |c|: the true concavity depends on where pi actually lies.
  return Concavity::uncertain();
}

namespace {

// Region where the second derivative of an exp truncation keeps the sign it
// has at c. Exploits the structure of T_m: even truncations are positive
// definite, odd ones are strictly increasing with a single real root.
std::optional<Interval> exp_convex_region(const Poly& dd, const Rational& c) {
  if (dd.is_zero()) return Interval::everything();
  if (dd.degree() == 0) {
    return dd.coeffs()[0].sign() >= 0 ? std::optional<Interval>(Interval::everything())
                                      : std::nullopt;
  }
  Rational at_c = dd.eval(c);
  if (at_c.sign() < 0) return std::nullopt;
  if (dd.degree() == 1) {
    // exact root of a + b x
    Rational root = -dd.coeffs()[0] / dd.coeffs()[1];
    if (dd.coeffs()[1].sign() > 0) return Interval::at_least(root);
    return Interval::at_most(root);
  }
  if (dd.degree() % 2 == 0) return Interval::everything();
  // Odd degree: single root left of 0; bracket it and return a conservative
  // right endpoint where positivity is certain.
  if (at_c.is_zero()) return Interval::at_least(c);
  Rational neg(-1);
  int guard = 0;
  while (dd.eval(neg).sign() >= 0) {
    neg = neg * Rational(2);
    if (++guard > 64) return Interval::at_least(c);  // conservative
  }
  Rational lo = neg;                          // dd(lo) < 0
  Rational hi = c < Rational(0) ? c : Rational(0);  // dd(hi) >= 0
  if (dd.eval(hi).sign() < 0) hi = c;
  for (int i = 0; i < 96; ++i) {
    Rational mid = (lo + hi) / Rational(2);
    int s = dd.eval(mid).sign();
    if (s == 0) return Interval::at_least(mid);
    if (s < 0) lo = mid;
    else hi = mid;
  }
  return Interval::at_least(hi);
}

// Certified constant-sign region of dd around c inside [edge_lo, edge_hi],
// grown by exact interval-arithmetic chunks.
Interval grow_sign_region(const Poly& dd, const Rational& c, int want_sign,
                          const Rational& edge_lo, const Rational& edge_hi) {
  auto chunk_ok = [&](const Rational& a, const Rational& b) {
    Rational lo, hi;
    dd.range_on(a, b, lo, hi);
    return want_sign >= 0 ? lo.sign() >= 0 : hi.sign() <= 0;
  };
  const Rational min_step(1, 65536);
  Rational right = c;
  Rational step(1, 2);
  while (right < edge_hi) {
    Rational next = right + step;
    if (next > edge_hi) next = edge_hi;
    if (chunk_ok(right, next)) {
      right = next;
      step = step * Rational(2);
    } else {
      step = step / Rational(2);
      if (step < min_step) break;
    }
  }
  Rational left = c;
  step = Rational(1, 2);
  while (left > edge_lo) {
    Rational next = left - step;
    if (next < edge_lo) next = edge_lo;
    if (chunk_ok(next, left)) {
      left = next;
      step = step * Rational(2);
    } else {
      step = step / Rational(2);
      if (step < min_step) break;
    }
  }
  return Interval::closed(left, right);
}

}  // namespace

std::optional<Interval> get_tangent_bounds(TransFn fn, const PolyPair& pair, Side side,
                                           const PiBounds& pi) {
  const Rational& c = pair.center;
  if (fn == TransFn::Exp) {
    // Refinement draws exp tangents on the lower polynomial only.
    if (side != Side::Lower) return std::nullopt;
    if (pair.lower.degree() == 0) return std::nullopt;  // exact-point pair; caller substitutes
    Poly dd = pair.lower.derivative().derivative();
    auto region = exp_convex_region(dd, c);
    if (!region) return std::nullopt;
    // Even truncations under-bound exp only for x >= 0.
    if (pair.n % 2 == 0 && !pair.lower.derivative().is_zero()) {
      region = Interval::intersect(*region, Interval::at_least(Rational(0)));
      if (!region || !region->contains(c)) return std::nullopt;
    }
    if (!region->contains(c)) return std::nullopt;
    return region;
  }
  if (fn != TransFn::Sin) return std::nullopt;

  // Base-period concavity region on c's side, then the certified sign region
  // of the polynomial's second derivative.
  Interval base = c.sign() > 0   ? Interval::closed(Rational(0), pi.lo)
                  : c.sign() < 0 ? Interval::closed(-pi.lo, Rational(0))
                  : side == Side::Upper ? Interval::closed(Rational(0), pi.lo)
                                        : Interval::closed(-pi.lo, Rational(0));
  if (!base.contains(c)) return std::nullopt;
  int want = side == Side::Upper ? -1 : +1;
  Poly dd = pair.side_poly(side).derivative().derivative();
  // The sign at the center must already comply.
  Rational at_c = dd.eval(c);
  if (want > 0 ? at_c.sign() < 0 : at_c.sign() > 0) return std::nullopt;
  Interval grown = grow_sign_region(dd, c, want, *base.lo, *base.hi);
  auto out = Interval::intersect(base, grown);
  if (!out || !out->contains(c)) return std::nullopt;
  if (out->is_point()) return std::nullopt;
  return out;
}

bool pair_safe_at(const PolyPair& pair, Side side, const Rational& p) {
  if (pair.fn == TransFn::Sin) return true;  // Maclaurin remainder bound is global
  const Rational& c = pair.center;
  if (side == Side::Upper) {
    if (c.is_zero()) return p.is_zero();
    if (c.sign() > 0) return p.sign() >= 0 && p <= c;  // pointwise factor dominance
    return p.sign() <= 0;                              // even truncation above exp on x <= 0
  }
  // Lower side: odd truncations bound exp from below everywhere, even ones on x >= 0.
  if (c.is_zero()) return p.is_zero();
  if (pair.n % 2 == 1) return true;
  return p.sign() >= 0;
}

void cert_enclosure(TransFn fn, const Rational& c, const Rational& eps, Rational& lb, Rational& ub) {
  const Rational big(32);
  if (c.abs() <= big) {
    PolyPair pp = poly_approx(fn, c, eps);
    lb = pp.lower_at_center();
    ub = pp.upper_at_center();
    return;
  }
  if (fn == TransFn::Sin) {
    lb = Rational(-1);
    ub = Rational(1);
    return;
  }
  // exp with a huge argument: coarse but sound.
  Poly t5 = exp_taylor(5);
  if (c.sign() > 0) {
    lb = t5.eval(c);
    mpz_class e = c.ceil();
    Rational three(3);
    ub = Rational(1);
    for (mpz_class i = 0; i < e; ++i) ub = ub * three;
  } else {
    lb = Rational(0);
    ub = Rational(1) / t5.eval(-c);
  }
}

}  // namespace translin
