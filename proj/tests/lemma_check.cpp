// SPDX-License-Identifier: Apache-2.0
#include "lemma_check.hpp"

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "oracle.hpp"
#include "translin/eval.hpp"
#include "translin/printer.hpp"

namespace translin::testing {

namespace {

struct SymbolScan {
  std::set<std::string> vars;
  bool uses_pi = false;
  std::vector<TermPtr> apps;  // every uf occurrence
  std::set<std::string> app_keys;

  void scan(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Variable: vars.insert(t->name()); break;
      case TermKind::Pi: uses_pi = true; break;
      case TermKind::Uf:
        if (app_keys.insert(to_smt2(t)).second) apps.push_back(t);
        break;
      default: break;
    }
    for (const auto& c : t->children()) scan(c);
  }
  void scan(const FormulaPtr& f) {
    if (f->kind() == FormulaKind::Atom) {
      scan(f->lhs());
      scan(f->rhs());
      return;
    }
    for (const auto& c : f->children()) scan(c);
  }
};

// Interval guard over a single variable, recognized from implies-shape lemmas.
struct GuardBox {
  std::optional<Rational> lo, hi;
};

std::optional<Rational> atom_bound(const FormulaPtr& g, const std::string& var, bool& is_lower) {
  if (g->kind() != FormulaKind::Atom) return std::nullopt;
  const TermPtr& l = g->lhs();
  const TermPtr& r = g->rhs();
  // x >= c  or  x <= c with constant side
  if (l->kind() == TermKind::Variable && l->name() == var && r->kind() == TermKind::Constant) {
    is_lower = g->rel() == RelOp::Ge || g->rel() == RelOp::Gt;
    return r->value();
  }
  return std::nullopt;
}

GuardBox guard_box(const FormulaPtr& lemma, const std::string& var) {
  GuardBox box;
  if (lemma->kind() != FormulaKind::Implies) return box;
  const FormulaPtr& g = lemma->child(0);
  std::vector<FormulaPtr> parts;
  if (g->kind() == FormulaKind::And) parts = g->children();
  else parts = {g};
  for (const auto& p : parts) {
    bool is_lower = false;
    auto b = atom_bound(p, var, is_lower);
    if (!b) continue;
    if (is_lower) box.lo = *b;
    else box.hi = *b;
  }
  return box;
}

struct Sampler {
  std::mt19937 rng;
  Rational coarse(const Rational& lo, const Rational& hi) {
    // Grid of 256 coarse steps across [lo, hi].
    std::uniform_int_distribution<int> d(0, 256);
    return lo + (hi - lo) * Rational(d(rng), 256);
  }
};

std::string check_shift(const Lemma& lem, const LemmaCheckOptions& opts, Sampler& smp) {
  // Shape: ((2s-1)pi <= x <= (2s+1)pi) -> y = x - 2s*pi.
  if (lem.formula->kind() != FormulaKind::Implies) return "shift lemma: unexpected shape";
  const FormulaPtr& conc = lem.formula->child(1);
  if (conc->kind() != FormulaKind::Atom || conc->rel() != RelOp::Eq)
    return "shift lemma: conclusion is not an equation";

  Rational pi_lo, pi_hi;
  oracle::pi_enclosure(pi_lo, pi_hi);
  Rational pi_mid = (pi_lo + pi_hi) / Rational(2);

  // Find s by evaluating the conclusion rhs at x = 0, pi = pi_mid:
  // rhs = x - 2s*pi  =>  rhs(0) = -2s*pi.
  Model probe;
  SymbolScan scan;
  scan.scan(lem.formula);
  std::string xname, yname;
  if (conc->lhs()->kind() == TermKind::Variable) yname = conc->lhs()->name();
  for (const auto& v : scan.vars)
    if (v != yname) xname = v;
  if (xname.empty() || yname.empty()) return "shift lemma: variables not recognized";
  probe.set(xname, Rational(0));
  probe.set(pi_symbol_name(), pi_mid);
  Rational rhs0 = evaluate(conc->rhs(), probe);
  Rational s_est = -rhs0 / (Rational(2) * pi_mid);
  if (!s_est.is_integer()) return "shift lemma: period index is not integral";

  for (unsigned i = 0; i < opts.samples; ++i) {
    // Sample x in the guard with pi at the true value.
    Rational lo = (Rational(2) * s_est - Rational(1)) * pi_mid;
    Rational hi = (Rational(2) * s_est + Rational(1)) * pi_mid;
    Rational x = smp.coarse(lo, hi);
    Model m;
    m.set(xname, x);
    m.set(pi_symbol_name(), pi_mid);
    Rational y = evaluate(conc->rhs(), m);
    if (y.abs() > pi_hi)
      return "shift lemma: shifted value " + y.str() + " escapes the base period";
    Rational sx_lo, sx_hi, sy_lo, sy_hi;
    oracle::enclose(TransFn::Sin, x, opts.digits, sx_lo, sx_hi);
    oracle::enclose(TransFn::Sin, y, opts.digits, sy_lo, sy_hi);
    // sin agrees across the shift up to the pi-enclosure slack.
    Rational slack = (pi_hi - pi_lo) * (Rational(2) * s_est.abs() + Rational(2)) +
                     Rational(1) / Rational(10).pow(50);
    if (sx_lo - slack > sy_hi || sy_lo - slack > sx_hi)
      return "shift lemma: sin mismatch across the shift at x = " + x.str();
  }
  return "";
}

}  // namespace

std::string check_lemma_soundness(const Lemma& lem, const LemmaCheckOptions& opts) {
  Sampler smp{std::mt19937(opts.seed)};

  if (lem.kind == LemmaKind::PiBound) {
    Rational lo, hi;
    oracle::pi_enclosure(lo, hi);
    if (lem.pi_at_emission.lo < lo && hi < lem.pi_at_emission.hi) return "";
    return "pi bound lemma does not bracket pi";
  }
  if (lem.kind == LemmaKind::Shift) return check_shift(lem, opts, smp);

  SymbolScan scan;
  scan.scan(lem.formula);

  std::vector<std::string> vars(scan.vars.begin(), scan.vars.end());
  unsigned tried = 0, used = 0;
  unsigned budget = opts.samples * 10;
  const Rational span(4);

  // Guard-aware range for single-variable lemmas.
  GuardBox box;
  if (vars.size() == 1) box = guard_box(lem.formula, vars[0]);

  while (used < opts.samples && tried < budget) {
    ++tried;
    Model base;
    for (const auto& v : vars) {
      Rational lo = lem.center - span, hi = lem.center + span;
      if (vars.size() == 1) {
        if (box.lo && *box.lo > lo) lo = *box.lo;
        if (box.hi && *box.hi < hi) hi = *box.hi;
      }
      base.set(v, smp.coarse(lo, hi));
    }
    if (scan.uses_pi) {
      std::uniform_int_distribution<int> d(1, 7);
      Rational w = lem.pi_at_emission.hi - lem.pi_at_emission.lo;
      base.set(pi_symbol_name(), lem.pi_at_emission.lo + w * Rational(d(smp.rng), 8));
    }

    // Interval values per congruence class of applications.
    std::vector<std::pair<std::string, std::pair<Rational, Rational>>> classes;
    std::map<std::string, std::pair<Rational, Rational>> by_sig;
    std::map<std::string, std::string> key_to_sig;
    bool skip = false;
    for (const auto& app : scan.apps) {
      Rational enc_lo, enc_hi;
      std::ostringstream sig;
      if (app->uf_fn() == UfFn::Fmul) {
        Rational va = evaluate(app->child(0), base);
        Rational vb = evaluate(app->child(1), base);
        enc_lo = enc_hi = va * vb;
        sig << "mul|" << va.str() << '|' << vb.str();
      } else {
        Rational arg;
        try {
          arg = evaluate(app->child(0), base);
        } catch (const EvalError&) {
          skip = true;  // nested application value not derivable here
          break;
        }
        TransFn fn = app->uf_fn() == UfFn::Fexp ? TransFn::Exp : TransFn::Sin;
        oracle::enclose(fn, arg, opts.digits, enc_lo, enc_hi);
        sig << uf_fn_name(app->uf_fn()) << '|' << arg.str();
      }
      key_to_sig[to_smt2(app)] = sig.str();
      by_sig.emplace(sig.str(), std::make_pair(enc_lo, enc_hi));
    }
    if (skip) continue;

    // Assign one interval per congruence class; occurrences share it.
    std::map<std::string, size_t> sig_index;
    std::vector<std::pair<Rational, Rational>> class_encs;
    for (const auto& [sig, enc] : by_sig) {
      sig_index[sig] = class_encs.size();
      class_encs.push_back(enc);
    }
    size_t n = class_encs.size();
    if (n > 16) return "lemma has too many application classes to corner-check";
    bool all_true = true;
    bool in_guard = true;
    for (size_t mask = 0; mask < (size_t(1) << n) && all_true; ++mask) {
      Model m = base;
      for (const auto& [key, sig] : key_to_sig) {
        size_t i = sig_index[sig];
        m.set(key, (mask >> i) & 1 ? class_encs[i].second : class_encs[i].first);
      }
      if (mask == 0 && lem.formula->kind() == FormulaKind::Implies)
        in_guard = evaluate(lem.formula->child(0), m);
      if (!evaluate(lem.formula, m)) all_true = false;
    }
    if (!all_true) {
      return "lemma " + to_smt2(lem.formula) + " violated near sample (corner check)";
    }
    if (in_guard) ++used;
  }
  if (used < opts.samples / 4)
    return "lemma " + to_smt2(lem.formula) + ": guard region under-sampled";
  return "";
}

}  // namespace translin::testing
