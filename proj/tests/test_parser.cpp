// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "translin/parser.hpp"
#include "translin/printer.hpp"

using namespace translin;

TEST_CASE("basic script") {
  Problem p = parse("(declare-fun x () Real)(assert (> (exp x) 1))(check-sat)");
  REQUIRE(p.assertions.size() == 1);
  CHECK(p.has_check_sat);
  CHECK(to_smt2(p.assertions[0]) == "(> (exp x) 1)");
  CHECK(p.declarations.size() == 1);
}

TEST_CASE("decimals become exact rationals") {
  Problem p = parse("(declare-fun y () Real)(assert (<= y 2.8))(check-sat)");
  const FormulaPtr& a = p.assertions[0];
  CHECK(a->rhs()->kind() == TermKind::Constant);
  CHECK(a->rhs()->value() == Rational(14, 5));
}

TEST_CASE("unsupported constructs are rejected loudly") {
  CHECK_THROWS_AS(parse("(assert (forall ((x Real)) (> x 0)))"), ParseError);
  CHECK_THROWS_AS(parse("(declare-fun x () Real)(assert (ite (> x 0) true false))"), ParseError);
  CHECK_THROWS_AS(parse("(declare-fun x () Real)(declare-fun y () Real)(assert (> (/ x y) 1))"),
                  ParseError);
  CHECK_THROWS_AS(parse("(declare-fun f (Real) Real)"), ParseError);
  CHECK_THROWS_AS(parse("(declare-fun .x () Real)"), ParseError);
  CHECK_THROWS_AS(parse("(push 1)"), ParseError);
  CHECK_THROWS_AS(parse("(declare-fun x () Real)(assert (> x 0"), ParseError);
  CHECK_THROWS_AS(parse("(assert (> y 0))"), ParseError);  // undeclared

  try {
    parse("(assert (forall ((x Real)) (> x 0)))");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseErrorKind::Unsupported);
    CHECK(std::string(e.what()).find("1:") != std::string::npos);  // position annotated
  }
}

TEST_CASE("division folds constant divisors") {
  Problem p = parse("(declare-fun x () Real)(assert (= (/ x 2) (/ 6 3)))");
  const FormulaPtr& a = p.assertions[0];
  CHECK(to_smt2(a->lhs()) == "(* (/ 1 2) x)");
  CHECK(a->rhs()->value() == Rational(2));
  CHECK_THROWS_AS(parse("(declare-fun x () Real)(assert (> (/ x 0) 1))"), ParseError);
}

TEST_CASE("let bindings inline") {
  Problem p = parse(
      "(declare-fun x () Real)"
      "(assert (let ((t (+ x 1)) (g (> x 0))) (and g (> t 0))))");
  CHECK(to_smt2(p.assertions[0]) == "(and (> x 0) (> (+ x 1) 0))");
}

TEST_CASE("boolean structure and sorts") {
  Problem p = parse(
      "(declare-fun b () Bool)(declare-fun x () Real)"
      "(assert (=> b (= x 0.5)))(assert (= b true))(check-sat)");
  CHECK(p.assertions.size() == 2);
  CHECK(to_smt2(p.assertions[0]) == "(=> b (= x (/ 1 2)))");
  CHECK(p.assertions[1]->kind() == FormulaKind::Iff);
  CHECK_THROWS_AS(parse("(declare-fun b () Bool)(assert (> b 0))"), ParseError);
}

TEST_CASE("pow parses with integer exponents only") {
  Problem p = parse("(declare-fun x () Real)(assert (> (pow x 3) 0))");
  CHECK(p.assertions[0]->lhs()->kind() == TermKind::Pow);
  CHECK(p.assertions[0]->lhs()->exponent() == 3);
  CHECK_THROWS_AS(parse("(declare-fun x () Real)(assert (> (pow x x) 0))"), ParseError);
}

TEST_CASE("parse-print round trip is structurally identical") {
  const char* scripts[] = {
      "(declare-fun x () Real)(assert (> (exp x) 1))(check-sat)",
      "(declare-fun x () Real)(declare-fun b () Bool)"
      "(assert (or b (not (<= (sin (+ x 1)) 0.25))))(check-sat)(get-model)",
      "(declare-fun u () Real)(assert (= (* u u) (cos u)))(check-sat)",
      "(declare-fun v () Real)(assert (and (< 0 v) (>= (log v) 1) (<= (atan v) 2)))",
  };
  for (const char* s : scripts) {
    Problem p1 = parse(s);
    Problem p2 = parse(p1.print());
    REQUIRE(p1.assertions.size() == p2.assertions.size());
    for (size_t i = 0; i < p1.assertions.size(); ++i)
      CHECK(formula_equal(p1.assertions[i], p2.assertions[i]));
    CHECK(p1.declarations.size() == p2.declarations.size());
    CHECK(p1.print() == p2.print());
  }
}
