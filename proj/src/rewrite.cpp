// SPDX-License-Identifier: Apache-2.0
#include "translin/rewrite.hpp"

#include <map>

#include "translin/printer.hpp"

namespace translin {

namespace {

TermPtr half_pi() { return Term::scaled(Rational(1, 2), Term::pi()); }

struct Rewriter {
  unsigned& counter;
  std::vector<FormulaPtr> side;  // accumulated relational constraints
  std::vector<Declaration> fresh;

  TermPtr fresh_var(const char* prefix) {
    std::string name = std::string(".") + prefix + std::to_string(counter++);
    fresh.push_back({name, Sort::Real});
    return Term::var(name);
  }

  TermPtr cos_of(TermPtr t) {
    // cos(t) = sin(pi/2 - t)
    return Term::trans(TransFn::Sin, Term::sub(half_pi(), std::move(t)));
  }

  TermPtr tan_of(TermPtr t) {
    // fresh w with sin(t) = w * cos(t) and cos(t) != 0
    TermPtr w = fresh_var("tn");
    TermPtr cos_t = cos_of(t);
    side.push_back(Formula::eq(Term::trans(TransFn::Sin, t), Term::product(w, cos_t)));
    side.push_back(Formula::disj({Formula::lt(cos_t, Term::constant(Rational(0))),
                                  Formula::gt(cos_t, Term::constant(Rational(0)))}));
    return w;
  }

  TermPtr asin_of(TermPtr t) {
    // fresh w with sin(w) = t and -pi/2 <= w <= pi/2
    TermPtr w = fresh_var("as");
    side.push_back(Formula::eq(Term::trans(TransFn::Sin, w), std::move(t)));
    side.push_back(Formula::between(Term::neg(half_pi()), w, half_pi()));
    return w;
  }

  TermPtr rewrite(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Variable:
      case TermKind::Constant:
      case TermKind::Pi:
        return t;
      case TermKind::Sum: {
        std::vector<TermPtr> cs;
        cs.reserve(t->children().size());
        for (const auto& c : t->children()) cs.push_back(rewrite(c));
        return Term::sum(std::move(cs));
      }
      case TermKind::Neg:
        return Term::neg(rewrite(t->child(0)));
      case TermKind::Product:
        return Term::product(rewrite(t->child(0)), rewrite(t->child(1)));
      case TermKind::Pow: {
        TermPtr base = rewrite(t->child(0));
        unsigned k = t->exponent();
        if (k == 0) return Term::constant(Rational(1));
        TermPtr acc = base;
        for (unsigned i = 1; i < k; ++i) acc = Term::product(acc, base);
        return acc;
      }
      case TermKind::Uf:
        return t;  // not produced by the parser; kept for totality
      case TermKind::Trans: {
        TermPtr arg = rewrite(t->child(0));
        switch (t->trans_fn()) {
          case TransFn::Exp:
          case TransFn::Sin:
            return Term::trans(t->trans_fn(), arg);
          case TransFn::Cos:
            return cos_of(arg);
          case TransFn::Tan:
            return tan_of(arg);
          case TransFn::Log: {
            // fresh w with exp(w) = t and t > 0
            TermPtr w = fresh_var("lg");
            side.push_back(Formula::eq(Term::trans(TransFn::Exp, w), arg));
            side.push_back(Formula::gt(arg, Term::constant(Rational(0))));
            return w;
          }
          case TransFn::Asin:
            return asin_of(arg);
          case TransFn::Acos:
            // acos(t) = pi/2 - asin(t)
            return Term::sub(half_pi(), asin_of(arg));
          case TransFn::Atan: {
            // fresh w with tan(w) = t and -pi/2 < w < pi/2
            TermPtr w = fresh_var("at");
            side.push_back(Formula::eq(tan_of(w), arg));
            side.push_back(Formula::conj({Formula::lt(Term::neg(half_pi()), w),
                                          Formula::lt(w, half_pi())}));
            return w;
          }
        }
        return t;
      }
    }
    return t;
  }

  FormulaPtr rewrite(const FormulaPtr& f) {
    switch (f->kind()) {
      case FormulaKind::Atom:
        return Formula::atom(f->rel(), rewrite(f->lhs()), rewrite(f->rhs()));
      case FormulaKind::BoolVar:
      case FormulaKind::True:
      case FormulaKind::False:
        return f;
      default: {
        std::vector<FormulaPtr> cs;
        cs.reserve(f->children().size());
        for (const auto& c : f->children()) cs.push_back(rewrite(c));
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

bool trans_only_exp_sin(const TermPtr& t, bool& ok) {
  if (t->kind() == TermKind::Trans && t->trans_fn() != TransFn::Exp && t->trans_fn() != TransFn::Sin)
    ok = false;
  for (const auto& c : t->children()) trans_only_exp_sin(c, ok);
  return ok;
}

struct Flattener {
  unsigned& counter;
  std::map<std::string, TermPtr> arg_to_fresh;  // printed arg term -> fresh variable
  std::vector<FormulaPtr> defs;
  std::vector<Declaration> fresh;

  TermPtr flat(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Variable:
      case TermKind::Constant:
      case TermKind::Pi:
        return t;
      case TermKind::Trans: {
        TermPtr arg = flat(t->child(0));
        if (arg->kind() == TermKind::Variable) return Term::trans(t->trans_fn(), arg);
        std::string key = to_smt2(arg);
        auto it = arg_to_fresh.find(key);
        TermPtr y;
        if (it != arg_to_fresh.end()) {
          y = it->second;
        } else {
          std::string name = ".t" + std::to_string(counter++);
          y = Term::var(name);
          fresh.push_back({name, Sort::Real});
          arg_to_fresh.emplace(key, y);
          defs.push_back(Formula::eq(y, arg));
        }
        return Term::trans(t->trans_fn(), y);
      }
      case TermKind::Sum: {
        std::vector<TermPtr> cs;
        cs.reserve(t->children().size());
        for (const auto& c : t->children()) cs.push_back(flat(c));
        return Term::sum(std::move(cs));
      }
      case TermKind::Neg:
        return Term::neg(flat(t->child(0)));
      case TermKind::Product:
        return Term::product(flat(t->child(0)), flat(t->child(1)));
      case TermKind::Pow:
        return Term::pow(flat(t->child(0)), t->exponent());
      case TermKind::Uf: {
        std::vector<TermPtr> args;
        for (const auto& c : t->children()) args.push_back(flat(c));
        return Term::uf(t->uf_fn(), std::move(args));
      }
    }
    return t;
  }

  FormulaPtr flat(const FormulaPtr& f) {
    switch (f->kind()) {
      case FormulaKind::Atom:
        return Formula::atom(f->rel(), flat(f->lhs()), flat(f->rhs()));
      case FormulaKind::BoolVar:
      case FormulaKind::True:
      case FormulaKind::False:
        return f;
      default: {
        std::vector<FormulaPtr> cs;
        for (const auto& c : f->children()) cs.push_back(flat(c));
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

Problem rewrite_transcendental(const Problem& p) {
  Problem out = p;
  Rewriter rw{out.fresh_counter, {}, {}};
  std::vector<FormulaPtr> rewritten;
  rewritten.reserve(p.assertions.size());
  for (const auto& a : p.assertions) rewritten.push_back(rw.rewrite(a));
  for (auto& f : rw.side) rewritten.push_back(std::move(f));
  out.assertions = std::move(rewritten);
  for (auto& d : rw.fresh) out.declarations.push_back(std::move(d));
  return out;
}

Problem flatten(const Problem& p) {
  Problem out = p;
  Flattener fl{out.fresh_counter, {}, {}, {}};
  std::vector<FormulaPtr> flat;
  flat.reserve(p.assertions.size());
  for (const auto& a : p.assertions) flat.push_back(fl.flat(a));
  // Definitions may themselves contain applications needing flattening.
  for (size_t i = 0; i < fl.defs.size(); ++i) {
    FormulaPtr d = fl.flat(fl.defs[i]);
    flat.push_back(d);
  }
  out.assertions = std::move(flat);
  for (auto& d : fl.fresh) out.declarations.push_back(std::move(d));
  return out;
}

Problem normalize(const Problem& p) { return flatten(rewrite_transcendental(p)); }

}  // namespace translin
