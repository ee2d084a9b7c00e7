// SPDX-License-Identifier: Apache-2.0
#include "translin/printer.hpp"

#include <sstream>

namespace translin {

std::string to_smt2(const Rational& q) {
  bool neg = q.sign() < 0;
  Rational a = q.abs();
  std::string body;
  if (a.is_integer()) {
    body = a.numerator().get_str();
  } else {
    body = "(/ " + a.numerator().get_str() + " " + a.denominator().get_str() + ")";
  }
  return neg ? "(- " + body + ")" : body;
}

namespace {

void print_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case TermKind::Variable:
      os << t.name();
      return;
    case TermKind::Constant:
      os << to_smt2(t.value());
      return;
    case TermKind::Pi:
      os << pi_symbol_name();
      return;
    case TermKind::Sum: {
      os << "(+";
      for (const auto& c : t.children()) {
        os << ' ';
        print_term(os, *c);
      }
      os << ')';
      return;
    }
    case TermKind::Neg:
      os << "(- ";
      print_term(os, *t.child(0));
      os << ')';
      return;
    case TermKind::Product:
      os << "(* ";
      print_term(os, *t.child(0));
      os << ' ';
      print_term(os, *t.child(1));
      os << ')';
      return;
    case TermKind::Pow:
      os << "(pow ";
      print_term(os, *t.child(0));
      os << ' ' << t.exponent() << ')';
      return;
    case TermKind::Trans:
      os << '(' << trans_fn_name(t.trans_fn()) << ' ';
      print_term(os, *t.child(0));
      os << ')';
      return;
    case TermKind::Uf: {
      os << '(' << uf_fn_name(t.uf_fn());
      for (const auto& c : t.children()) {
        os << ' ';
        print_term(os, *c);
      }
      os << ')';
      return;
    }
  }
}

void print_formula(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      os << '(' << rel_op_name(f.rel()) << ' ';
      print_term(os, *f.lhs());
      os << ' ';
      print_term(os, *f.rhs());
      os << ')';
      return;
    case FormulaKind::Not:
      os << "(not ";
      print_formula(os, *f.child(0));
      os << ')';
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      os << (f.kind() == FormulaKind::And ? "(and" : "(or");
      for (const auto& c : f.children()) {
        os << ' ';
        print_formula(os, *c);
      }
      os << ')';
      return;
    }
    case FormulaKind::Implies:
      os << "(=> ";
      print_formula(os, *f.child(0));
      os << ' ';
      print_formula(os, *f.child(1));
      os << ')';
      return;
    case FormulaKind::Iff:
      os << "(= ";
      print_formula(os, *f.child(0));
      os << ' ';
      print_formula(os, *f.child(1));
      os << ')';
      return;
    case FormulaKind::BoolVar:
      os << f.name();
      return;
    case FormulaKind::True:
      os << "true";
      return;
    case FormulaKind::False:
      os << "false";
      return;
  }
}

}  // namespace

std::string to_smt2(const TermPtr& t) {
  std::ostringstream os;
  print_term(os, *t);
  return os.str();
}

std::string to_smt2(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula(os, *f);
  return os.str();
}

}  // namespace translin
