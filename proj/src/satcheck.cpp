// SPDX-License-Identifier: Apache-2.0
#include "translin/satcheck.hpp"

#include <map>
#include <set>

#include "translin/printer.hpp"

namespace translin {

namespace {

void free_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind() == TermKind::Variable) out.insert(t->name());
  for (const auto& c : t->children()) free_vars(c, out);
}

// Defined-variable inlining: top-level conjuncts of the shape v = t (or
// t = v) with v not occurring in t are turned into a substitution before
// grounding, so variables pinned to transcendental values follow their
// defining term into the check instead of being frozen at the model value.
void top_level_conjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind() == FormulaKind::And) {
    for (const auto& c : f->children()) top_level_conjuncts(c, out);
    return;
  }
  out.push_back(f);
}

Substitution defining_equations(const std::vector<FormulaPtr>& conjuncts) {
  Substitution defs;
  std::vector<FormulaPtr> flat;
  for (const auto& f : conjuncts) top_level_conjuncts(f, flat);
  for (const auto& f : flat) {
    if (f->kind() != FormulaKind::Atom || f->rel() != RelOp::Eq) continue;
    const TermPtr* var = nullptr;
    const TermPtr* rhs = nullptr;
    if (f->lhs()->kind() == TermKind::Variable) {
      var = &f->lhs();
      rhs = &f->rhs();
    } else if (f->rhs()->kind() == TermKind::Variable) {
      var = &f->rhs();
      rhs = &f->lhs();
    } else {
      continue;
    }
    const std::string& name = (*var)->name();
    if (defs.terms.count(name)) continue;
    TermPtr closed = substitute(*rhs, defs);
    std::set<std::string> occurring;
    free_vars(closed, occurring);
    if (occurring.count(name)) continue;  // cycle
    defs.terms[name] = closed;
  }
  // Close the map so no right-hand side mentions a defined variable.
  for (int round = 0; round < 64; ++round) {
    bool changed = false;
    for (auto& [name, rhs] : defs.terms) {
      TermPtr next = substitute(rhs, defs);
      if (!term_equal(next, rhs)) {
        std::set<std::string> occurring;
        free_vars(next, occurring);
        if (occurring.count(name)) continue;
        rhs = next;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return defs;
}

struct CtCollector {
  const Rational& eps;
  std::vector<Declaration>& decls;
  std::vector<FormulaPtr>& bound_conjuncts;
  // (function, argument value) -> fresh variable
  std::map<std::string, TermPtr> ct;

  TermPtr y_for(UfFn fn, const Rational& arg) {
    std::string key = std::string(uf_fn_name(fn)) + "@" + arg.str();
    auto it = ct.find(key);
    if (it != ct.end()) return it->second;
    std::string name = ".u" + std::to_string(ct.size());
    TermPtr y = Term::var(name);
    ct.emplace(key, y);
    decls.push_back({name, Sort::Real});
    Rational lb, ub;
    TransFn tf = fn == UfFn::Fexp ? TransFn::Exp : TransFn::Sin;
    cert_enclosure(tf, arg, eps, lb, ub);
    bound_conjuncts.push_back(Formula::between(Term::constant(lb), y, Term::constant(ub)));
    return y;
  }

  TermPtr close(const TermPtr& t) {
    if (t->kind() == TermKind::Uf) {
      std::vector<TermPtr> args;
      for (const auto& c : t->children()) args.push_back(close(c));
      if (t->uf_fn() == UfFn::Fmul) {
        // Consistent at this point (the NRA refinement found no violation),
        // so the application folds to the exact product.
        Model empty;
        Rational va = evaluate(args[0], empty);
        Rational vb = evaluate(args[1], empty);
        return Term::constant(va * vb);
      }
      Model empty;
      Rational arg = evaluate(args[0], empty);
      return y_for(t->uf_fn(), arg);
    }
    if (t->children().empty()) return t;
    switch (t->kind()) {
      case TermKind::Sum: {
        std::vector<TermPtr> cs;
        for (const auto& c : t->children()) cs.push_back(close(c));
        return Term::sum(std::move(cs));
      }
      case TermKind::Neg:
        return Term::neg(close(t->child(0)));
      case TermKind::Product:
        return Term::product(close(t->child(0)), close(t->child(1)));
      case TermKind::Pow:
        return Term::pow(close(t->child(0)), t->exponent());
      default:
        return t;
    }
  }

  FormulaPtr close(const FormulaPtr& f) {
    switch (f->kind()) {
      case FormulaKind::Atom:
        return Formula::atom(f->rel(), close(f->lhs()), close(f->rhs()));
      case FormulaKind::BoolVar:
      case FormulaKind::True:
      case FormulaKind::False:
        return f;
      default: {
        std::vector<FormulaPtr> cs;
        for (const auto& c : f->children()) cs.push_back(close(c));
        switch (f->kind()) {
          case FormulaKind::Not: return Formula::negation(cs[0]);
          case FormulaKind::And: return Formula::conj(std::move(cs));
          case FormulaKind::Or: return Formula::disj(std::move(cs));
          case FormulaKind::Implies: return Formula::implies(cs[0], cs[1]);
          case FormulaKind::Iff: return Formula::iff(cs[0], cs[1]);
          default: return f;
        }
      }
    }
  }
};

}  // namespace

FrameRequest build_universal_check(const std::vector<FormulaPtr>& phi_hat,
                                   const AbstractionContext& ctx, const Model& m,
                                   const Rational& eps) {
  Substitution defs = defining_equations(phi_hat);

  // Ground every remaining symbol at its model value.
  Substitution ground;
  for (const auto& name : ctx.tracked_reals) {
    if (defs.terms.count(name)) continue;
    auto it = m.reals.find(name);
    if (it != m.reals.end()) ground.terms[name] = Term::constant(it->second);
  }
  for (const auto& name : ctx.tracked_bools) {
    auto it = m.bools.find(name);
    if (it != m.bools.end()) ground.bools[name] = Formula::truth(it->second);
  }
  if (m.reals.count(pi_symbol_name()))
    ground.terms[pi_symbol_name()] = Term::constant(m.reals.at(pi_symbol_name()));

  FrameRequest req;
  std::vector<FormulaPtr> bounds;
  CtCollector collector{eps, req.local_decls, bounds, {}};

  std::vector<FormulaPtr> grounded;
  grounded.reserve(phi_hat.size());
  for (const auto& f : phi_hat) {
    FormulaPtr inlined = substitute(f, defs);
    FormulaPtr g = substitute(inlined, ground);
    grounded.push_back(collector.close(g));
  }

  req.formulas = std::move(bounds);
  req.formulas.push_back(Formula::negation(Formula::conj(std::move(grounded))));
  return req;
}

bool check_model(const std::vector<FormulaPtr>& phi_hat, const AbstractionContext& ctx,
                 const Model& m, const Rational& eps, Backend& backend) {
  // Fast path: every transcendental application sits at its exact rational
  // point (exp at 0, sin at 0) with the matching value, so the abstract model
  // lifts directly.
  bool all_exact = true;
  auto exact = [&](const FtfApp& app, const Rational& expected) {
    Rational arg = m.reals.at(app.arg->name());
    Rational val = m.reals.at(to_smt2(app.app));
    return arg.is_zero() && val == expected;
  };
  for (const auto& e : ctx.fexp_apps)
    if (!exact(e, Rational(1))) { all_exact = false; break; }
  if (all_exact) {
    for (const auto& s : ctx.fsin_ext)
      if (!exact(s, Rational(0))) { all_exact = false; break; }
  }
  if (all_exact) {
    for (const auto& s : ctx.fsin_base)
      if (!exact(s, Rational(0))) { all_exact = false; break; }
  }
  if (all_exact) return true;

  FrameRequest req = build_universal_check(phi_hat, ctx, m, eps);
  SolveOutcome out = backend.fresh_frame(req);
  return out.status == SolveStatus::Unsat;
}

}  // namespace translin
