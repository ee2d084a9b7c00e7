// SPDX-License-Identifier: Apache-2.0
#include "translin/abstraction.hpp"

#include <optional>
#include <set>

#include "translin/printer.hpp"

namespace translin {

const std::vector<PiBounds>& pi_convergent_table() {
  static const std::vector<PiBounds> table = {
      {Rational("333/106"), Rational("355/113")},
      {Rational("103993/33102"), Rational("104348/33215")},
      {Rational("208341/66317"), Rational("312689/99532")},
      {Rational("833719/265381"), Rational("1146408/364913")},
      {Rational("4272943/1360120"), Rational("5419351/1725033")},
      {Rational("80143857/25510582"), Rational("165707065/52746197")},
      {Rational("245850922/78256779"), Rational("411557987/131002976")},
      {Rational("1068966896/340262731"), Rational("2549491779/811528438")},
      {Rational("6167950454/1963319607"), Rational("14885392687/4738167652")},
      {Rational("21053343141/6701487259"), Rational("1783366216531/567663097408")},
      {Rational("3587785776203/1142027682075"), Rational("5371151992734/1709690779483")},
      {Rational("8958937768937/2851718461558"), Rational("139755218526789/44485467702853")},
  };
  return table;
}

PiBounds AbstractionContext::refine_pi() {
  const auto& table = pi_convergent_table();
  if (pi_index_ + 1 >= table.size()) throw PiTableExhausted();
  pi_ = table[++pi_index_];
  return pi_;
}

namespace {

std::optional<Rational> constant_value(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Constant:
      return t->value();
    case TermKind::Neg: {
      auto v = constant_value(t->child(0));
      if (v) return -*v;
      return std::nullopt;
    }
    case TermKind::Sum: {
      Rational acc(0);
      for (const auto& c : t->children()) {
        auto v = constant_value(c);
        if (!v) return std::nullopt;
        acc += *v;
      }
      return acc;
    }
    case TermKind::Product: {
      auto a = constant_value(t->child(0));
      if (!a) return std::nullopt;
      auto b = constant_value(t->child(1));
      if (!b) return std::nullopt;
      return *a * *b;
    }
    default:
      return std::nullopt;
  }
}

struct AbstractionBuilderImpl {
  AbstractionContext& ctx;
  std::set<std::string> seen_apps;

  TermPtr abstract(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Variable:
      case TermKind::Constant:
        return t;
      case TermKind::Pi:
        ctx.uses_pi = true;
        return t;
      case TermKind::Sum: {
        std::vector<TermPtr> cs;
        cs.reserve(t->children().size());
        for (const auto& c : t->children()) cs.push_back(abstract(c));
        return Term::sum(std::move(cs));
      }
      case TermKind::Neg:
        return Term::neg(abstract(t->child(0)));
      case TermKind::Product: {
        TermPtr a = abstract(t->child(0));
        TermPtr b = abstract(t->child(1));
        if (constant_value(a) || constant_value(b)) return Term::product(a, b);
        TermPtr app = Term::uf(UfFn::Fmul, {a, b});
        if (seen_apps.insert(to_smt2(app)).second) ctx.fmul_apps.push_back({app});
        return app;
      }
      case TermKind::Pow:
        throw std::logic_error("initial_abstraction: pow must be rewritten first");
      case TermKind::Trans: {
        if (t->trans_fn() != TransFn::Exp && t->trans_fn() != TransFn::Sin)
          throw std::logic_error("initial_abstraction: unrewritten transcendental function");
        TermPtr arg = t->child(0);
        if (arg->kind() != TermKind::Variable)
          throw std::logic_error("initial_abstraction: unflattened argument " + to_smt2(arg));
        UfFn fn = t->trans_fn() == TransFn::Exp ? UfFn::Fexp : UfFn::Fsin;
        TermPtr app = Term::uf(fn, {arg});
        if (seen_apps.insert(to_smt2(app)).second) {
          if (fn == UfFn::Fexp) ctx.fexp_apps.push_back({app, fn, arg, nullptr, nullptr});
          else ctx.fsin_ext.push_back({app, fn, arg, nullptr, nullptr});
        }
        return app;
      }
      case TermKind::Uf:
        return t;
    }
    return t;
  }

  FormulaPtr abstract(const FormulaPtr& f) {
    switch (f->kind()) {
      case FormulaKind::Atom:
        return Formula::atom(f->rel(), abstract(f->lhs()), abstract(f->rhs()));
      case FormulaKind::BoolVar:
      case FormulaKind::True:
      case FormulaKind::False:
        return f;
      default: {
        std::vector<FormulaPtr> cs;
        for (const auto& c : f->children()) cs.push_back(abstract(c));
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

void collect_apps(const TermPtr& t, std::set<std::string>& seen, std::vector<TermPtr>& out) {
  if (t->kind() == TermKind::Uf) {
    if (seen.insert(to_smt2(t)).second) out.push_back(t);
  }
  for (const auto& c : t->children()) collect_apps(c, seen, out);
}

void collect_apps(const FormulaPtr& f, std::set<std::string>& seen, std::vector<TermPtr>& out) {
  if (f->kind() == FormulaKind::Atom) {
    collect_apps(f->lhs(), seen, out);
    collect_apps(f->rhs(), seen, out);
    return;
  }
  for (const auto& c : f->children()) collect_apps(c, seen, out);
}

}  // namespace

std::vector<FormulaPtr> initial_axioms(const AbstractionContext& ctx) {
  std::vector<FormulaPtr> out;
  TermPtr zero = Term::constant(Rational(0));
  TermPtr one = Term::constant(Rational(1));
  TermPtr pi = Term::pi();
  TermPtr half_pi = Term::scaled(Rational(1, 2), pi);

  for (const auto& e : ctx.fexp_apps) {
    const TermPtr& x = e.arg;
    const TermPtr& fx = e.app;
    // Lower Bound
    out.push_back(Formula::gt(fx, zero));
    // Zero
    out.push_back(Formula::conj({Formula::iff(Formula::eq(x, zero), Formula::eq(fx, one)),
                                 Formula::iff(Formula::lt(x, zero), Formula::lt(fx, one)),
                                 Formula::iff(Formula::gt(x, zero), Formula::gt(fx, one))}));
    // Zero Tangent Line
    out.push_back(Formula::disj(
        {Formula::eq(x, zero), Formula::gt(fx, Term::sum({x, one}))}));
  }

  // Generic sin range bound, for extended and base occurrences alike.
  auto range_axiom = [&](const FtfApp& s) {
    out.push_back(Formula::between(Term::constant(Rational(-1)), s.app, one));
  };
  for (const auto& s : ctx.fsin_ext) range_axiom(s);
  for (const auto& s : ctx.fsin_base) range_axiom(s);

  for (const auto& s : ctx.fsin_base) {
    const TermPtr& y = s.arg;
    const TermPtr& fy = s.app;
    TermPtr f_neg_y = Term::uf(UfFn::Fsin, {Term::neg(y)});
    // Symmetry
    out.push_back(Formula::eq(fy, Term::neg(f_neg_y)));
    // Phase
    out.push_back(Formula::conj(
        {Formula::iff(Formula::conj({Formula::lt(zero, y), Formula::lt(y, pi)}),
                      Formula::gt(fy, zero)),
         Formula::iff(Formula::conj({Formula::lt(Term::neg(pi), y), Formula::lt(y, zero)}),
                      Formula::lt(fy, zero))}));
    // Zero Tangent
    out.push_back(Formula::conj({Formula::implies(Formula::gt(y, zero), Formula::lt(fy, y)),
                                 Formula::implies(Formula::lt(y, zero), Formula::gt(fy, y))}));
    // Pi Tangent
    out.push_back(Formula::conj(
        {Formula::implies(Formula::lt(y, pi), Formula::lt(fy, Term::sum({Term::neg(y), pi}))),
         Formula::implies(Formula::gt(y, Term::neg(pi)),
                          Formula::gt(fy, Term::sum({Term::neg(y), Term::neg(pi)})))}));
    // Significant Values
    TermPtr pi6 = Term::scaled(Rational(1, 6), pi);
    TermPtr pi56 = Term::scaled(Rational(5, 6), pi);
    out.push_back(Formula::conj(
        {Formula::iff(Formula::eq(fy, zero),
                      Formula::disj({Formula::eq(y, zero), Formula::eq(y, pi),
                                     Formula::eq(y, Term::neg(pi))})),
         Formula::iff(Formula::eq(fy, one), Formula::eq(y, half_pi)),
         Formula::iff(Formula::eq(fy, Term::constant(Rational(-1))),
                      Formula::eq(y, Term::neg(half_pi))),
         Formula::iff(Formula::eq(fy, Term::constant(Rational(1, 2))),
                      Formula::disj({Formula::eq(y, pi6), Formula::eq(y, pi56)})),
         Formula::iff(Formula::eq(fy, Term::constant(Rational(-1, 2))),
                      Formula::disj({Formula::eq(y, Term::neg(pi6)),
                                     Formula::eq(y, Term::neg(pi56))}))}));
  }

  // Multiplication schema: zero and sign, plus commutativity and negation
  // congruence between registered occurrences.
  std::set<std::string> fmul_keys;
  for (const auto& m : ctx.fmul_apps) fmul_keys.insert(to_smt2(m.app));
  for (const auto& m : ctx.fmul_apps) {
    const TermPtr& a = m.app->child(0);
    const TermPtr& b = m.app->child(1);
    const TermPtr& ab = m.app;
    out.push_back(Formula::iff(
        Formula::eq(ab, zero),
        Formula::disj({Formula::eq(a, zero), Formula::eq(b, zero)})));
    out.push_back(Formula::conj(
        {Formula::implies(Formula::conj({Formula::gt(a, zero), Formula::gt(b, zero)}),
                          Formula::gt(ab, zero)),
         Formula::implies(Formula::conj({Formula::lt(a, zero), Formula::lt(b, zero)}),
                          Formula::gt(ab, zero)),
         Formula::implies(Formula::conj({Formula::gt(a, zero), Formula::lt(b, zero)}),
                          Formula::lt(ab, zero)),
         Formula::implies(Formula::conj({Formula::lt(a, zero), Formula::gt(b, zero)}),
                          Formula::lt(ab, zero))}));
    TermPtr swapped = Term::uf(UfFn::Fmul, {b, a});
    if (!term_equal(swapped, ab) && fmul_keys.count(to_smt2(swapped)))
      out.push_back(Formula::eq(ab, swapped));
    TermPtr neg_a = Term::uf(UfFn::Fmul, {Term::neg(a), b});
    if (fmul_keys.count(to_smt2(neg_a)))
      out.push_back(Formula::eq(neg_a, Term::neg(ab)));
    TermPtr neg_b = Term::uf(UfFn::Fmul, {a, Term::neg(b)});
    if (fmul_keys.count(to_smt2(neg_b)))
      out.push_back(Formula::eq(neg_b, Term::neg(ab)));
  }
  return out;
}

Abstraction initial_abstraction(const Problem& p) {
  Abstraction out;
  AbstractionBuilderImpl builder{out.ctx, {}};

  for (const auto& a : p.assertions) out.conjuncts.push_back(builder.abstract(a));

  // Base variables and period constraints for every sin occurrence.
  TermPtr pi = Term::pi();
  std::map<std::string, TermPtr> base_by_arg;
  for (auto& s : out.ctx.fsin_ext) {
    const std::string& arg_name = s.arg->name();
    TermPtr y;
    auto it = base_by_arg.find(arg_name);
    if (it != base_by_arg.end()) {
      y = it->second;
    } else {
      std::string base_name =
          ".b_" + (arg_name[0] == '.' ? arg_name.substr(1) : arg_name);
      y = Term::var(base_name);
      base_by_arg.emplace(arg_name, y);
      TermPtr base_app = Term::uf(UfFn::Fsin, {y});
      out.ctx.fsin_base.push_back({base_app, UfFn::Fsin, y, nullptr, nullptr});
      out.conjuncts.push_back(Formula::between(Term::neg(pi), y, pi));
      out.conjuncts.push_back(Formula::implies(
          Formula::between(Term::neg(pi), s.arg, pi), Formula::eq(y, s.arg)));
      out.conjuncts.push_back(Formula::eq(s.app, base_app));
    }
    s.base_var = y;
    s.base_app = Term::uf(UfFn::Fsin, {y});
  }
  if (!out.ctx.fsin_ext.empty()) out.ctx.uses_pi = true;

  if (out.ctx.uses_pi) {
    const PiBounds& b = out.ctx.pi();
    out.conjuncts.push_back(Formula::lt(Term::constant(b.lo), pi));
    out.conjuncts.push_back(Formula::lt(pi, Term::constant(b.hi)));
  }

  out.axioms = initial_axioms(out.ctx);

  // Tracked symbol inventory, in deterministic order.
  for (const auto& d : p.declarations) {
    if (d.sort == Sort::Real) out.ctx.tracked_reals.push_back(d.name);
    else out.ctx.tracked_bools.push_back(d.name);
  }
  for (const auto& s : out.ctx.fsin_base) out.ctx.tracked_reals.push_back(s.arg->name());
  if (out.ctx.uses_pi) out.ctx.tracked_reals.push_back(pi_symbol_name());
  std::set<std::string> seen;
  for (const auto& f : out.conjuncts) collect_apps(f, seen, out.ctx.tracked_apps);
  for (const auto& f : out.axioms) collect_apps(f, seen, out.ctx.tracked_apps);
  return out;
}

}  // namespace translin
