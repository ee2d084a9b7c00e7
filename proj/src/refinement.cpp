// SPDX-License-Identifier: Apache-2.0
#include "translin/refinement.hpp"

#include <stdexcept>

#include "translin/printer.hpp"
#include "translin/satcheck.hpp"

namespace translin {

const char* lemma_kind_name(LemmaKind k) {
  switch (k) {
    case LemmaKind::Tangent: return "tangent";
    case LemmaKind::SecantPair: return "secant";
    case LemmaKind::Shift: return "shift";
    case LemmaKind::Monotonicity: return "monotonicity";
    case LemmaKind::Nra: return "nra";
    case LemmaKind::PiBound: return "pi-bound";
  }
  return "?";
}

std::optional<Rational> SecantStore::neighbor_below(const std::string& key, const Rational& c,
                                                    const std::optional<Rational>& floor) const {
  const auto& pts = points(key);
  std::optional<Rational> best;
  for (const auto& p : pts) {
    if (p >= c) break;
    if (floor && p < *floor) continue;
    best = p;
  }
  return best;
}

std::optional<Rational> SecantStore::neighbor_above(const std::string& key, const Rational& c,
                                                    const std::optional<Rational>& ceiling) const {
  const auto& pts = points(key);
  auto it = pts.upper_bound(c);
  if (it == pts.end()) return std::nullopt;
  if (ceiling && *it > *ceiling) return std::nullopt;
  return *it;
}

TermPtr line_term(const Rational& a0, const Rational& a1, const TermPtr& x) {
  if (a1.is_zero()) return Term::constant(a0);
  TermPtr slope_part = Term::scaled(a1, x);
  if (a0.is_zero()) return slope_part;
  return Term::sum({Term::constant(a0), slope_part});
}

FormulaPtr guarded(const Interval& guard, const TermPtr& x, FormulaPtr psi) {
  std::vector<FormulaPtr> gs;
  if (guard.lo) {
    gs.push_back(guard.lo_open ? Formula::gt(x, Term::constant(*guard.lo))
                               : Formula::ge(x, Term::constant(*guard.lo)));
  }
  if (guard.hi) {
    gs.push_back(guard.hi_open ? Formula::lt(x, Term::constant(*guard.hi))
                               : Formula::le(x, Term::constant(*guard.hi)));
  }
  if (gs.empty()) return psi;
  return Formula::implies(Formula::conj(std::move(gs)), std::move(psi));
}

namespace {

// Fixed-degree pair construction used when nudging a pair to a strictly
// tighter window (the minimal-degree search already ran in poly_approx).
PolyPair rebuild_pair(TransFn fn, const Rational& c, unsigned n, const Rational& eps) {
  PolyPair out;
  out.fn = fn;
  out.center = c;
  out.eps = eps;
  out.n = n;
  if (fn == TransFn::Exp) {
    if (c.sign() < 0) {
      if (n % 2 == 0) ++n;
      out.n = n;
      out.lower = exp_taylor(n);
      out.upper = exp_taylor(n + 1);
      return out;
    }
    out.lower = exp_taylor(n);
    Rational f = Rational(1) - c.pow(n + 1) / factorial(n + 1);
    if (f.sign() > 0) {
      out.upper = out.lower.scaled(Rational(1) / f);
      out.exp_scaled = true;
    } else {
      out.upper = out.lower;  // placeholder; callers bump further
    }
    return out;
  }
  Poly tn = sin_taylor(n);
  Poly rem = sin_remainder_bound(n);
  std::vector<Rational> lo = tn.coeffs(), hi = tn.coeffs();
  lo.resize(std::max(lo.size(), rem.coeffs().size()), Rational(0));
  hi.resize(std::max(hi.size(), rem.coeffs().size()), Rational(0));
  for (size_t i = 0; i < rem.coeffs().size(); ++i) {
    lo[i] -= rem.coeffs()[i];
    hi[i] += rem.coeffs()[i];
  }
  out.lower = Poly(std::move(lo));
  out.upper = Poly(std::move(hi));
  return out;
}

PolyPair bump_degree(const PolyPair& pair) {
  unsigned step = (pair.fn == TransFn::Exp && pair.center.sign() < 0) ? 2 : 1;
  unsigned n = pair.n + step;
  if (pair.fn == TransFn::Exp && pair.center.is_zero()) n = pair.n + 2;  // odd ladder
  return rebuild_pair(pair.fn, pair.center, n, pair.eps);
}

void spurious_sides(const PolyPair& pair, const Rational& v, bool& below, bool& above) {
  Rational pl = pair.lower_at_center();
  Rational pu = pair.upper_at_center();
  if (pair.exact_point()) {
    below = v < pl;
    above = v > pu;
  } else {
    below = v <= pl;
    above = v >= pu;
  }
}

}  // namespace

Rational Refiner::simplified_center(const Rational& c, int precision) const {
  size_t num_bits = mpz_sizeinbase(c.numerator().get_mpz_t(), 2);
  size_t den_bits = mpz_sizeinbase(c.denominator().get_mpz_t(), 2);
  if (num_bits <= 64 && den_bits <= 64) return c;
  mpz_class max_den;
  mpz_ui_pow_ui(max_den.get_mpz_t(), 10, static_cast<unsigned long>(precision + 2));
  return cf_approx(c, max_den);
}

std::optional<Lemma> Refiner::tangent_lemma(const FtfApp& app, TransFn fn, const Rational& c,
                                            const Rational& v, bool below, PolyPair pair) {
  if (fn == TransFn::Exp && c.is_zero() && below) {
    // The width-0 constant pair cannot carry a tangent; the odd truncation is
    // a global lower bound and its tangent at 0 is the zero-tangent line.
    pair = rebuild_pair(TransFn::Exp, c, 1, pair.eps);
  }
  Side side = below ? Side::Lower : Side::Upper;
  for (int bump = 0; bump <= 12; ++bump) {
    auto interval = get_tangent_bounds(fn, pair, side, ctx_.pi());
    if (interval && interval->contains(c)) {
      const Poly& p = pair.side_poly(side);
      Rational a1 = p.derivative().eval(c);
      Rational value = p.eval(c);
      Rational a0 = value - a1 * c;
      bool falsified = below ? v < value : v > value;
      if (falsified) {
        FormulaPtr psi = below ? Formula::ge(app.app, line_term(a0, a1, app.arg))
                               : Formula::le(app.app, line_term(a0, a1, app.arg));
        Lemma lem{guarded(*interval, app.arg, psi), LemmaKind::Tangent, to_smt2(app.app), c,
                  ctx_.pi(), true};
        return lem;
      }
    }
    pair = bump_degree(pair);
  }
  return std::nullopt;
}

std::vector<Lemma> Refiner::secant_lemmas(const FtfApp& app, TransFn fn, const Rational& c,
                                          const Rational& v, bool below, PolyPair pair) {
  std::vector<Lemma> out;
  Side side = below ? Side::Lower : Side::Upper;
  std::string key = to_smt2(app.app);

  // Neighbors must stay inside c's concavity region of the base period so the
  // chords never straddle an inflection point.
  std::optional<Rational> lo_clip, hi_clip;
  if (fn == TransFn::Sin) {
    if (c.sign() >= 0) {
      lo_clip = Rational(0);
      hi_clip = ctx_.pi().lo;
    } else {
      lo_clip = -ctx_.pi().lo;
      hi_clip = Rational(0);
    }
  }

  // Ensure the center value strictly separates v from the polynomial.
  for (int bump = 0; bump <= 32; ++bump) {
    Rational wc = pair.side_poly(side).eval(c);
    bool strict = below ? v < wc : v > wc;
    if (strict) break;
    pair = bump_degree(pair);
  }
  Rational wc = pair.side_poly(side).eval(c);
  if (!(below ? v < wc : v > wc)) return out;  // cannot make progress here

  auto endpoint_value = [&](const Rational& p) -> Rational {
    if (pair_safe_at(pair, side, p)) return pair.side_poly(side).eval(p);
    PolyPair local = poly_approx(fn, p, pair.eps);
    return local.side_poly(side).eval(p);
  };

  auto emit = [&](const Rational& p, bool left) {
    Rational wp = endpoint_value(p);
    Rational slope = (wc - wp) / (c - p);
    Rational a0 = wc - slope * c;
    FormulaPtr psi = below ? Formula::ge(app.app, line_term(a0, slope, app.arg))
                           : Formula::le(app.app, line_term(a0, slope, app.arg));
    Interval g = left ? Interval::closed(p, c) : Interval::closed(c, p);
    FormulaPtr lem = guarded(g, app.arg, psi);
    Lemma l{lem, LemmaKind::SecantPair, key, c, ctx_.pi(), false};
    out.push_back(std::move(l));
  };

  std::optional<Rational> l = store_.neighbor_below(key, c, lo_clip);
  if (!l) {
    Rational synth = c - Rational(1);
    if (lo_clip && synth < *lo_clip) synth = *lo_clip;
    if (synth < c) l = synth;
  }
  std::optional<Rational> u = store_.neighbor_above(key, c, hi_clip);
  if (!u) {
    Rational synth = c + Rational(1);
    if (hi_clip && synth > *hi_clip) synth = *hi_clip;
    if (synth > c) u = synth;
  }
  if (l) emit(*l, true);
  if (u) emit(*u, false);
  store_.add(key, c);
  return out;
}

Lemma Refiner::point_pin_lemma(const FtfApp& app, TransFn fn, const Rational& c, const Rational& v,
                               bool below, const PolyPair& pair) {
  (void)fn;  // the pair carries the function
  PolyPair cur = pair;
  Side side = below ? Side::Lower : Side::Upper;
  for (int bump = 0; bump <= 32; ++bump) {
    Rational w = cur.side_poly(side).eval(c);
    if (below ? v < w : v > w) break;
    cur = bump_degree(cur);
  }
  Rational w = cur.side_poly(side).eval(c);
  FormulaPtr psi = below ? Formula::ge(app.app, Term::constant(w))
                         : Formula::le(app.app, Term::constant(w));
  FormulaPtr lem = guarded(Interval::point(c), app.arg, psi);
  bool falsified = below ? v < w : v > w;
  return Lemma{lem, LemmaKind::Tangent, to_smt2(app.app), c, ctx_.pi(), falsified};
}

std::vector<Lemma> Refiner::get_lemmas_point(const FtfApp& app, TransFn fn, const Model& m,
                                             const PolyPair& pair) {
  const Rational& c = pair.center;
  Rational v = m.reals.at(to_smt2(app.app));
  bool below = false, above = false;
  spurious_sides(pair, v, below, above);
  if (!below && !above) return {};

  Concavity conc = get_concavity(fn, c, ctx_.pi());
  if (conc.pi_uncertain) throw std::logic_error("get_lemmas_point: undetermined concavity");

  bool tangent_branch = (below && conc.sign >= 0) || (above && conc.sign <= 0);
  if (tangent_branch) {
    auto t = tangent_lemma(app, fn, c, v, below, pair);
    if (t) {
      // Progress is judged against the triggering model, not the center.
      t->falsified_by_trigger = !evaluate(t->formula, m);
      return {*t};
    }
    Lemma pin = point_pin_lemma(app, fn, c, v, below, pair);
    pin.falsified_by_trigger = !evaluate(pin.formula, m);
    return {pin};
  }

  auto s = secant_lemmas(app, fn, c, v, below, pair);
  if (s.empty()) {
    Lemma pin = point_pin_lemma(app, fn, c, v, below, pair);
    pin.falsified_by_trigger = !evaluate(pin.formula, m);
    return {pin};
  }
  for (auto& lem : s) lem.falsified_by_trigger = !evaluate(lem.formula, m);
  return s;
}

RefineOutcome Refiner::check_refine(const Model& m, int precision, int depth) {
  RefineOutcome out;
  out.reached_precision = precision;
  for (auto& lem : nra_refine(m)) out.lemmas.push_back(std::move(lem));
  Rational eps = Rational(1) / Rational(10).pow(static_cast<unsigned long>(precision));

  bool pi_lemma_done = false;
  auto handle = [&](const FtfApp& app, TransFn fn) {
    std::string key = to_smt2(app.app);
    Rational c_exact = m.reals.at(app.arg->name());
    Rational v = m.reals.at(key);

    Concavity conc = get_concavity(fn, c_exact, ctx_.pi());
    if (conc.pi_uncertain) {
      if (!pi_lemma_done) {
        pi_lemma_done = true;
        PiBounds nb = ctx_.refine_pi();
        FormulaPtr f = Formula::conj({Formula::lt(Term::constant(nb.lo), Term::pi()),
                                      Formula::lt(Term::pi(), Term::constant(nb.hi))});
        Lemma lem{f, LemmaKind::PiBound, key, c_exact, nb, false};
        lem.falsified_by_trigger = !evaluate(lem.formula, m);
        out.lemmas.push_back(std::move(lem));
      }
      return;
    }

    auto attempt = [&](const Rational& center) -> std::vector<Lemma> {
      if (get_concavity(fn, center, ctx_.pi()).pi_uncertain) return {};
      PolyPair pair = poly_approx(fn, center, eps);
      bool below = false, above = false;
      spurious_sides(pair, v, below, above);
      if (!below && !above) return {};
      return get_lemmas_point(app, fn, m, pair);
    };

    Rational c_simpl = simplified_center(c_exact, precision);
    if (c_simpl != c_exact) {
      auto ls = attempt(c_simpl);
      bool all_falsified = !ls.empty();
      for (const auto& lem : ls) all_falsified = all_falsified && lem.falsified_by_trigger;
      if (all_falsified) {
        for (auto& lem : ls) out.lemmas.push_back(std::move(lem));
        return;
      }
    }
    for (auto& lem : attempt(c_exact)) out.lemmas.push_back(std::move(lem));
  };

  for (const auto& e : ctx_.fexp_apps) handle(e, TransFn::Exp);
  for (const auto& s : ctx_.fsin_base) handle(s, TransFn::Sin);

  if (!out.lemmas.empty()) return out;

  ++universal_checks_;
  if (check_model(phi_hat_, ctx_, m, eps, backend_)) {
    out.sat = true;
    return out;
  }
  if (depth < kRecursionCap) {
    RefineOutcome deeper = check_refine(m, precision + 1, depth + 1);
    if (deeper.reached_precision < out.reached_precision)
      deeper.reached_precision = out.reached_precision;
    return deeper;
  }
  out.needs_more_precision = true;
  return out;
}

std::vector<Lemma> Refiner::refine_extra(const Model& m) {
  std::vector<Lemma> out;

  // exp is strictly increasing; flag order violations between occurrences.
  const auto& exps = ctx_.fexp_apps;
  for (size_t i = 0; i < exps.size(); ++i) {
    for (size_t j = i + 1; j < exps.size(); ++j) {
      const FtfApp* a = &exps[i];
      const FtfApp* b = &exps[j];
      Rational xa = m.reals.at(a->arg->name());
      Rational xb = m.reals.at(b->arg->name());
      if (xa == xb) continue;
      if (xb < xa) std::swap(a, b), std::swap(xa, xb);
      Rational fa = m.reals.at(to_smt2(a->app));
      Rational fb = m.reals.at(to_smt2(b->app));
      if (fa >= fb) {
        FormulaPtr f = Formula::iff(Formula::lt(a->arg, b->arg), Formula::lt(a->app, b->app));
        out.push_back({f, LemmaKind::Monotonicity, to_smt2(a->app), xa, ctx_.pi(), true});
      }
    }
  }

  if (!ctx_.fsin_ext.empty() && ctx_.uses_pi && m.reals.count(pi_symbol_name())) {
    Rational vpi = m.reals.at(pi_symbol_name());
    TermPtr pi = Term::pi();

    // Shift lemmas relate extended-period arguments to their base variables.
    for (const auto& s : ctx_.fsin_ext) {
      if (!s.base_var) continue;
      Rational vx = m.reals.at(s.arg->name());
      Rational vy = m.reals.at(s.base_var->name());
      Rational q = (vx + vpi) / (vpi * Rational(2));
      mpz_class cands[2] = {q.trunc(), q.floor()};
      for (const mpz_class& sz : cands) {
        Rational sr{mpq_class(sz)};
        if (sr.is_zero()) break;  // base-period identity is already asserted
        Rational expected = vx - Rational(2) * sr * vpi;
        if (vy == expected) break;
        Rational two_s = Rational(2) * sr;
        FormulaPtr guard =
            Formula::between(Term::scaled(two_s - Rational(1), pi), s.arg,
                             Term::scaled(two_s + Rational(1), pi));
        FormulaPtr conclusion =
            Formula::eq(s.base_var, Term::sum({s.arg, Term::neg(Term::scaled(two_s, pi))}));
        FormulaPtr f = Formula::implies(guard, conclusion);
        Lemma lem{f, LemmaKind::Shift, to_smt2(s.app), vx, ctx_.pi(), false};
        lem.falsified_by_trigger = !evaluate(lem.formula, m);
        if (lem.falsified_by_trigger) {
          out.push_back(std::move(lem));
          break;
        }
      }
    }

    // sin monotonicity on the three base-period regions.
    const auto& bases = ctx_.fsin_base;
    Rational half = vpi / Rational(2);
    TermPtr half_pi = Term::scaled(Rational(1, 2), pi);
    for (size_t i = 0; i < bases.size(); ++i) {
      for (size_t j = 0; j < bases.size(); ++j) {
        if (i == j) continue;
        Rational y1 = m.reals.at(bases[i].arg->name());
        Rational y2 = m.reals.at(bases[j].arg->name());
        if (!(y1 < y2)) continue;
        Rational f1 = m.reals.at(to_smt2(bases[i].app));
        Rational f2 = m.reals.at(to_smt2(bases[j].app));
        const TermPtr& t1 = bases[i].arg;
        const TermPtr& t2 = bases[j].arg;
        auto chain = [&](const TermPtr& lo, const TermPtr& hi) {
          return Formula::conj({Formula::le(lo, t1), Formula::lt(t1, t2), Formula::le(t2, hi)});
        };
        FormulaPtr f;
        if (-half <= y1 && y2 <= half && f1 >= f2) {
          f = Formula::implies(chain(Term::neg(half_pi), half_pi),
                               Formula::lt(bases[i].app, bases[j].app));
        } else if (-vpi <= y1 && y2 <= -half && f1 <= f2) {
          f = Formula::implies(chain(Term::neg(pi), Term::neg(half_pi)),
                               Formula::gt(bases[i].app, bases[j].app));
        } else if (half <= y1 && y2 <= vpi && f1 <= f2) {
          f = Formula::implies(chain(half_pi, pi),
                               Formula::gt(bases[i].app, bases[j].app));
        }
        if (f) {
          out.push_back({f, LemmaKind::Monotonicity, to_smt2(bases[i].app), y1, ctx_.pi(), true});
        }
      }
    }
  }
  return out;
}

std::vector<Lemma> Refiner::nra_refine(const Model& m) {
  std::vector<Lemma> out;
  for (const auto& mul : ctx_.fmul_apps) {
    const TermPtr& a = mul.app->child(0);
    const TermPtr& b = mul.app->child(1);
    Rational alpha = evaluate(a, m);
    Rational beta = evaluate(b, m);
    Rational v = m.reals.at(to_smt2(mul.app));
    Rational prod = alpha * beta;
    if (v == prod) continue;

    // Tangent plane of the bilinear surface at (alpha, beta):
    //   mul(a,b) - (beta*a + alpha*b - alpha*beta) = (a-alpha)(b-beta)
    TermPtr plane = Term::sum({Term::scaled(beta, a), Term::scaled(alpha, b),
                               Term::constant(-(alpha * beta))});
    TermPtr ca = Term::constant(alpha);
    TermPtr cb = Term::constant(beta);
    bool want_lower = v < prod;  // violated from below: assert the >= side
    FormulaPtr psi = want_lower ? Formula::ge(mul.app, plane) : Formula::le(mul.app, plane);
    FormulaPtr g1, g2;
    if (want_lower) {
      g1 = Formula::conj({Formula::ge(a, ca), Formula::ge(b, cb)});
      g2 = Formula::conj({Formula::le(a, ca), Formula::le(b, cb)});
    } else {
      g1 = Formula::conj({Formula::le(a, ca), Formula::ge(b, cb)});
      g2 = Formula::conj({Formula::ge(a, ca), Formula::le(b, cb)});
    }
    for (const auto& g : {g1, g2}) {
      Lemma lem{Formula::implies(g, psi), LemmaKind::Nra, to_smt2(mul.app), alpha, ctx_.pi(),
                false};
      lem.falsified_by_trigger = !evaluate(lem.formula, m);
      if (out.empty() || !formula_equal(out.back().formula, lem.formula))
        out.push_back(std::move(lem));
    }
  }
  return out;
}

}  // namespace translin
