// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "translin/eval.hpp"
#include "translin/printer.hpp"

using namespace translin;

namespace {
TermPtr rc(long n, long d = 1) { return Term::constant(Rational(n, d)); }
}  // namespace

TEST_CASE("printer renders canonical smt2") {
  TermPtr x = Term::var("x");
  CHECK(to_smt2(Term::sum({x, rc(1)})) == "(+ x 1)");
  CHECK(to_smt2(Term::constant(Rational(-7, 2))) == "(- (/ 7 2))");
  CHECK(to_smt2(Term::uf(UfFn::Fexp, {x})) == "(.fexp x)");
  CHECK(to_smt2(Term::scaled(Rational(1, 2), Term::pi())) == "(* (/ 1 2) .pi)");
  CHECK(to_smt2(Formula::gt(Term::trans(TransFn::Exp, x), rc(1))) == "(> (exp x) 1)");
}

TEST_CASE("evaluate terms and formulas") {
  TermPtr x = Term::var("x");
  Model m;
  m.set("x", Rational(0));
  CHECK(evaluate(Term::sum({x, rc(1)}), m) == Rational(1));

  // fexp(x) <= 3 under {x -> 1, fexp(x) -> 64/23}
  TermPtr fexp_x = Term::uf(UfFn::Fexp, {x});
  Model m2;
  m2.set("x", Rational(1));
  m2.set("(.fexp x)", Rational(64, 23));
  CHECK(evaluate(Formula::le(fexp_x, rc(3)), m2));

  // 2*pi under {pi -> 355/113}
  Model m3;
  m3.set(".pi", Rational(355, 113));
  CHECK(evaluate(Term::scaled(Rational(2), Term::pi()), m3) == Rational(710, 113));

  Model empty;
  CHECK_THROWS_AS(evaluate(x, empty), EvalError);
  CHECK_THROWS_AS(evaluate(Term::trans(TransFn::Exp, x), m), EvalError);
}

TEST_CASE("substitute") {
  TermPtr x = Term::var("x");
  // x > 0 with x -> 0
  Substitution s1;
  s1.terms["x"] = rc(0);
  FormulaPtr f1 = substitute(Formula::gt(x, rc(0)), s1);
  CHECK(to_smt2(f1) == "(> 0 0)");

  // fexp(x) >= 1 + x with x -> 1: direct replacement, rhs evaluates to 2
  FormulaPtr f2 = substitute(Formula::ge(Term::uf(UfFn::Fexp, {x}), Term::sum({rc(1), x})), s1);
  // reuse s1 but with x -> 1
  Substitution s2;
  s2.terms["x"] = rc(1);
  f2 = substitute(Formula::ge(Term::uf(UfFn::Fexp, {x}), Term::sum({rc(1), x})), s2);
  CHECK(to_smt2(f2->lhs()) == "(.fexp 1)");
  Model empty;
  CHECK(evaluate(f2->rhs(), empty) == Rational(2));

  // occurrence-key replacement: fexp(1) >= 2 with fexp(1) -> y1
  Substitution s3;
  s3.terms["(.fexp 1)"] = Term::var("y1");
  FormulaPtr f3 = substitute(f2, s3);
  CHECK(to_smt2(f3) == "(>= y1 (+ 1 1))");
}

TEST_CASE("evaluate/substitute coherence") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> val(-20, 20);
  TermPtr x = Term::var("x");
  TermPtr y = Term::var("y");
  for (int i = 0; i < 500; ++i) {
    // random linear-ish term c0 + c1*x + c2*y and formula over it
    TermPtr t = Term::sum({rc(val(rng)), Term::scaled(Rational(val(rng)), x),
                           Term::scaled(Rational(val(rng)), y)});
    FormulaPtr f = Formula::lt(t, rc(val(rng)));
    TermPtr c = Term::sum({rc(val(rng)), Term::scaled(Rational(val(rng)), y)});

    Substitution sigma;
    sigma.terms["x"] = c;

    Model m;
    m.set("y", Rational(val(rng)));
    Model extended = m;
    extended.set("x", evaluate(c, m));

    CHECK(evaluate(substitute(f, sigma), m) == evaluate(f, extended));
  }
}

TEST_CASE("structural equality and hashing") {
  TermPtr a = Term::sum({Term::var("x"), rc(1)});
  TermPtr b = Term::sum({Term::var("x"), rc(1)});
  CHECK(term_equal(a, b));
  CHECK(a->hash() == b->hash());
  FormulaPtr f1 = Formula::gt(a, rc(0));
  FormulaPtr f2 = Formula::gt(b, rc(0));
  CHECK(formula_equal(f1, f2));
  CHECK_FALSE(formula_equal(f1, Formula::ge(a, rc(0))));
}
