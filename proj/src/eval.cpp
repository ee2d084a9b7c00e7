// SPDX-License-Identifier: Apache-2.0
#include "translin/eval.hpp"

#include "translin/printer.hpp"

namespace translin {

Rational evaluate(const TermPtr& t, const Model& m) {
  switch (t->kind()) {
    case TermKind::Variable: {
      auto it = m.reals.find(t->name());
      if (it == m.reals.end()) throw EvalError("unassigned symbol: " + t->name());
      return it->second;
    }
    case TermKind::Constant:
      return t->value();
    case TermKind::Pi: {
      auto it = m.reals.find(pi_symbol_name());
      if (it == m.reals.end()) throw EvalError("unassigned symbol: .pi");
      return it->second;
    }
    case TermKind::Sum: {
      Rational acc(0);
      for (const auto& c : t->children()) acc += evaluate(c, m);
      return acc;
    }
    case TermKind::Neg:
      return -evaluate(t->child(0), m);
    case TermKind::Product:
      return evaluate(t->child(0), m) * evaluate(t->child(1), m);
    case TermKind::Pow:
      return evaluate(t->child(0), m).pow(t->exponent());
    case TermKind::Trans:
      throw EvalError("cannot evaluate transcendental application " + to_smt2(t));
    case TermKind::Uf: {
      std::string key = to_smt2(t);
      auto it = m.reals.find(key);
      if (it == m.reals.end()) throw EvalError("unassigned application: " + key);
      return it->second;
    }
  }
  throw EvalError("unreachable term kind");
}

bool evaluate(const FormulaPtr& f, const Model& m) {
  switch (f->kind()) {
    case FormulaKind::Atom: {
      Rational l = evaluate(f->lhs(), m);
      Rational r = evaluate(f->rhs(), m);
      switch (f->rel()) {
        case RelOp::Lt: return l < r;
        case RelOp::Le: return l <= r;
        case RelOp::Eq: return l == r;
        case RelOp::Ge: return l >= r;
        case RelOp::Gt: return l > r;
      }
      return false;
    }
    case FormulaKind::Not:
      return !evaluate(f->child(0), m);
    case FormulaKind::And:
      for (const auto& c : f->children())
        if (!evaluate(c, m)) return false;
      return true;
    case FormulaKind::Or:
      for (const auto& c : f->children())
        if (evaluate(c, m)) return true;
      return false;
    case FormulaKind::Implies:
      return !evaluate(f->child(0), m) || evaluate(f->child(1), m);
    case FormulaKind::Iff:
      return evaluate(f->child(0), m) == evaluate(f->child(1), m);
    case FormulaKind::BoolVar: {
      auto it = m.bools.find(f->name());
      if (it == m.bools.end()) throw EvalError("unassigned boolean: " + f->name());
      return it->second;
    }
    case FormulaKind::True:
      return true;
    case FormulaKind::False:
      return false;
  }
  throw EvalError("unreachable formula kind");
}

TermPtr substitute(const TermPtr& t, const Substitution& sigma) {
  switch (t->kind()) {
    case TermKind::Variable: {
      auto it = sigma.terms.find(t->name());
      return it != sigma.terms.end() ? it->second : t;
    }
    case TermKind::Constant:
      return t;
    case TermKind::Pi: {
      auto it = sigma.terms.find(pi_symbol_name());
      return it != sigma.terms.end() ? it->second : t;
    }
    case TermKind::Uf: {
      // Whole-occurrence replacement takes precedence over descending.
      auto it = sigma.terms.find(to_smt2(t));
      if (it != sigma.terms.end()) return it->second;
      std::vector<TermPtr> args;
      args.reserve(t->children().size());
      for (const auto& c : t->children()) args.push_back(substitute(c, sigma));
      return Term::uf(t->uf_fn(), std::move(args));
    }
    case TermKind::Trans: {
      auto it = sigma.terms.find(to_smt2(t));
      if (it != sigma.terms.end()) return it->second;
      return Term::trans(t->trans_fn(), substitute(t->child(0), sigma));
    }
    case TermKind::Sum: {
      std::vector<TermPtr> cs;
      cs.reserve(t->children().size());
      for (const auto& c : t->children()) cs.push_back(substitute(c, sigma));
      return Term::sum(std::move(cs));
    }
    case TermKind::Neg:
      return Term::neg(substitute(t->child(0), sigma));
    case TermKind::Product:
      return Term::product(substitute(t->child(0), sigma), substitute(t->child(1), sigma));
    case TermKind::Pow:
      return Term::pow(substitute(t->child(0), sigma), t->exponent());
  }
  return t;
}

FormulaPtr substitute(const FormulaPtr& f, const Substitution& sigma) {
  switch (f->kind()) {
    case FormulaKind::Atom:
      return Formula::atom(f->rel(), substitute(f->lhs(), sigma), substitute(f->rhs(), sigma));
    case FormulaKind::BoolVar: {
      auto it = sigma.bools.find(f->name());
      return it != sigma.bools.end() ? it->second : f;
    }
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    default: {
      std::vector<FormulaPtr> cs;
      cs.reserve(f->children().size());
      for (const auto& c : f->children()) cs.push_back(substitute(c, sigma));
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

}  // namespace translin
