// SPDX-License-Identifier: Apache-2.0
#include "translin/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "translin/printer.hpp"
#include "translin/sexpr.hpp"

namespace translin {

namespace {

[[noreturn]] void fail(ParseErrorKind kind, const SExpr& at, const std::string& msg) {
  const char* tag = kind == ParseErrorKind::Syntax ? "syntax-error"
                    : kind == ParseErrorKind::Sort ? "sort-error"
                                                   : "unsupported-construct";
  throw ParseError(kind, std::string(tag) + " at " + at.where() + ": " + msg);
}

bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_decimal(const std::string& s) {
  bool dot = false, digit = false;
  for (char c : s) {
    if (c == '.') {
      if (dot) return false;
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else {
      return false;
    }
  }
  return dot && digit;
}

/// Either a real-sorted term or a Boolean formula.
struct Node {
  TermPtr term;
  FormulaPtr formula;
  bool is_term() const { return term != nullptr; }
};

struct ParserState {
  Problem problem;
  std::map<std::string, Sort> sorts;
  using Env = std::map<std::string, Node>;

  std::optional<Node> lookup(const Env& env, const std::string& name) const {
    auto it = env.find(name);
    if (it != env.end()) return it->second;
    auto st = sorts.find(name);
    if (st == sorts.end()) return std::nullopt;
    if (st->second == Sort::Real) return Node{Term::var(name), nullptr};
    return Node{nullptr, Formula::bool_var(name)};
  }

  Node parse_node(const SExpr& e, const Env& env);

  TermPtr parse_term(const SExpr& e, const Env& env) {
    Node n = parse_node(e, env);
    if (!n.is_term()) fail(ParseErrorKind::Sort, e, "expected a Real term");
    return n.term;
  }

  FormulaPtr parse_formula(const SExpr& e, const Env& env) {
    Node n = parse_node(e, env);
    if (n.is_term()) fail(ParseErrorKind::Sort, e, "expected a Bool term");
    return n.formula;
  }
};

const std::map<std::string, TransFn> kTransNames = {
    {"exp", TransFn::Exp},   {"sin", TransFn::Sin},   {"cos", TransFn::Cos},
    {"tan", TransFn::Tan},   {"log", TransFn::Log},   {"arcsin", TransFn::Asin},
    {"asin", TransFn::Asin}, {"arccos", TransFn::Acos}, {"acos", TransFn::Acos},
    {"arctan", TransFn::Atan}, {"atan", TransFn::Atan}};

RelOp rel_from(const std::string& s) {
  if (s == "<") return RelOp::Lt;
  if (s == "<=") return RelOp::Le;
  if (s == ">=") return RelOp::Ge;
  if (s == ">") return RelOp::Gt;
  return RelOp::Eq;
}

Node ParserState::parse_node(const SExpr& e, const Env& env) {
  if (e.is_atom) {
    const std::string& a = e.atom;
    if (a == "true") return {nullptr, Formula::truth(true)};
    if (a == "false") return {nullptr, Formula::truth(false)};
    if (is_numeral(a)) return {Term::constant(Rational(a)), nullptr};
    if (is_decimal(a)) return {Term::constant(Rational::from_decimal_string(a)), nullptr};
    auto found = lookup(env, a);
    if (!found) fail(ParseErrorKind::Syntax, e, "undeclared symbol '" + a + "'");
    return *found;
  }
  if (e.size() == 0) fail(ParseErrorKind::Syntax, e, "empty application");
  if (!e[0].is_atom) fail(ParseErrorKind::Syntax, e, "expected an operator symbol");
  const std::string& op = e[0].atom;
  size_t argc = e.size() - 1;

  if (op == "forall" || op == "exists") fail(ParseErrorKind::Unsupported, e, "quantifiers are not supported");
  if (op == "ite") fail(ParseErrorKind::Unsupported, e, "ite is not supported");
  if (op == "select" || op == "store") fail(ParseErrorKind::Unsupported, e, "arrays are not supported");
  if (op == "!") fail(ParseErrorKind::Unsupported, e, "annotations are not supported");

  if (op == "let") {
    if (argc != 2 || e[1].is_atom) fail(ParseErrorKind::Syntax, e, "malformed let");
    Env inner = env;
    for (const auto& binding : e[1].items) {
      if (binding.is_atom || binding.size() != 2 || !binding[0].is_atom)
        fail(ParseErrorKind::Syntax, binding, "malformed let binding");
      // parallel let: values are parsed in the outer environment
      inner[binding[0].atom] = parse_node(binding[1], env);
    }
    return parse_node(e[2], inner);
  }

  if (op == "and" || op == "or") {
    std::vector<FormulaPtr> fs;
    for (size_t i = 1; i < e.size(); ++i) fs.push_back(parse_formula(e[i], env));
    if (fs.empty()) fail(ParseErrorKind::Syntax, e, op + " needs arguments");
    return {nullptr, op == "and" ? Formula::conj(std::move(fs)) : Formula::disj(std::move(fs))};
  }
  if (op == "not") {
    if (argc != 1) fail(ParseErrorKind::Syntax, e, "not takes one argument");
    return {nullptr, Formula::negation(parse_formula(e[1], env))};
  }
  if (op == "=>") {
    if (argc < 2) fail(ParseErrorKind::Syntax, e, "=> takes at least two arguments");
    // right-associative chain
    FormulaPtr acc = parse_formula(e[e.size() - 1], env);
    for (size_t i = e.size() - 1; i-- > 1;) acc = Formula::implies(parse_formula(e[i], env), acc);
    return {nullptr, acc};
  }

  if (op == "<" || op == "<=" || op == ">=" || op == ">" || op == "=") {
    if (argc < 2) fail(ParseErrorKind::Syntax, e, "relation needs two arguments");
    std::vector<Node> ns;
    for (size_t i = 1; i < e.size(); ++i) ns.push_back(parse_node(e[i], env));
    bool all_terms = true, all_formulas = true;
    for (const auto& n : ns) (n.is_term() ? all_formulas : all_terms) = false;
    if (op == "=" && all_formulas) {
      FormulaPtr acc = Formula::iff(ns[0].formula, ns[1].formula);
      for (size_t i = 2; i < ns.size(); ++i) {
        acc = Formula::conj({acc, Formula::iff(ns[i - 1].formula, ns[i].formula)});
      }
      return {nullptr, acc};
    }
    if (!all_terms) fail(ParseErrorKind::Sort, e, "relation arguments must share a sort");
    RelOp rel = rel_from(op);
    std::vector<FormulaPtr> chain;
    for (size_t i = 0; i + 1 < ns.size(); ++i)
      chain.push_back(Formula::atom(rel, ns[i].term, ns[i + 1].term));
    return {nullptr, Formula::conj(std::move(chain))};
  }

  if (op == "+") {
    std::vector<TermPtr> ts;
    for (size_t i = 1; i < e.size(); ++i) ts.push_back(parse_term(e[i], env));
    if (ts.empty()) fail(ParseErrorKind::Syntax, e, "+ needs arguments");
    return {Term::sum(std::move(ts)), nullptr};
  }
  if (op == "-") {
    if (argc == 0) fail(ParseErrorKind::Syntax, e, "- needs arguments");
    if (argc == 1) return {Term::neg(parse_term(e[1], env)), nullptr};
    std::vector<TermPtr> ts{parse_term(e[1], env)};
    for (size_t i = 2; i < e.size(); ++i) ts.push_back(Term::neg(parse_term(e[i], env)));
    return {Term::sum(std::move(ts)), nullptr};
  }
  if (op == "*") {
    if (argc < 1) fail(ParseErrorKind::Syntax, e, "* needs arguments");
    TermPtr acc = parse_term(e[1], env);
    for (size_t i = 2; i < e.size(); ++i) acc = Term::product(acc, parse_term(e[i], env));
    return {acc, nullptr};
  }
  if (op == "/") {
    if (argc < 2) fail(ParseErrorKind::Syntax, e, "/ needs two arguments");
    TermPtr acc = parse_term(e[1], env);
    for (size_t i = 2; i < e.size(); ++i) {
      TermPtr d = parse_term(e[i], env);
      if (d->kind() != TermKind::Constant)
        fail(ParseErrorKind::Unsupported, e[i], "non-constant divisor");
      if (d->value().is_zero()) fail(ParseErrorKind::Syntax, e[i], "division by zero");
      Rational inv = Rational(1) / d->value();
      if (acc->kind() == TermKind::Constant) {
        acc = Term::constant(acc->value() * inv);
      } else {
        acc = Term::product(Term::constant(inv), acc);
      }
    }
    return {acc, nullptr};
  }
  if (op == "pow" || op == "^") {
    if (argc != 2) fail(ParseErrorKind::Syntax, e, "pow takes two arguments");
    TermPtr base = parse_term(e[1], env);
    if (!e[2].is_atom || !is_numeral(e[2].atom))
      fail(ParseErrorKind::Unsupported, e[2], "pow exponent must be a non-negative integer numeral");
    unsigned long k = std::stoul(e[2].atom);
    return {Term::pow(base, static_cast<unsigned>(k)), nullptr};
  }

  auto tf = kTransNames.find(op);
  if (tf != kTransNames.end()) {
    if (argc != 1) fail(ParseErrorKind::Syntax, e, op + " takes one argument");
    return {Term::trans(tf->second, parse_term(e[1], env)), nullptr};
  }

  fail(ParseErrorKind::Unsupported, e, "unknown operator or non-constant function '" + op + "'");
}

}  // namespace

Problem parse(const std::string& text, const std::string& source_name) {
  std::vector<SExpr> commands;
  try {
    commands = read_sexprs(text);
  } catch (const SexprError& err) {
    throw ParseError(ParseErrorKind::Syntax, std::string("syntax-error: ") + err.what());
  }

  ParserState st;
  st.problem.source_name = source_name;

  for (const SExpr& cmd : commands) {
    if (cmd.is_atom || cmd.size() == 0 || !cmd[0].is_atom)
      fail(ParseErrorKind::Syntax, cmd, "expected a command");
    const std::string& head = cmd[0].atom;

    if (head == "set-logic" || head == "set-info" || head == "set-option" || head == "exit") {
      continue;  // metadata; ignored
    }
    if (head == "declare-fun" || head == "declare-const") {
      bool is_fun = head == "declare-fun";
      size_t expect = is_fun ? 4 : 3;
      if (cmd.size() != expect || !cmd[1].is_atom)
        fail(ParseErrorKind::Syntax, cmd, "malformed " + head);
      if (is_fun && (cmd[2].is_atom || cmd[2].size() != 0))
        fail(ParseErrorKind::Unsupported, cmd[2], "only 0-ary declarations are supported");
      const SExpr& sort_e = cmd[is_fun ? 3 : 2];
      if (!sort_e.is_atom) fail(ParseErrorKind::Unsupported, sort_e, "unsupported sort");
      Sort sort;
      if (sort_e.atom == "Real") sort = Sort::Real;
      else if (sort_e.atom == "Bool") sort = Sort::Bool;
      else fail(ParseErrorKind::Unsupported, sort_e, "unsupported sort '" + sort_e.atom + "'");
      const std::string& name = cmd[1].atom;
      if (name.size() > 0 && name[0] == '.')
        fail(ParseErrorKind::Unsupported, cmd[1], "symbols starting with '.' are reserved");
      if (st.sorts.count(name)) fail(ParseErrorKind::Syntax, cmd[1], "symbol redeclared: " + name);
      st.sorts[name] = sort;
      st.problem.declarations.push_back({name, sort});
      continue;
    }
    if (head == "assert") {
      if (cmd.size() != 2) fail(ParseErrorKind::Syntax, cmd, "assert takes one argument");
      st.problem.assertions.push_back(st.parse_formula(cmd[1], {}));
      continue;
    }
    if (head == "check-sat") {
      st.problem.has_check_sat = true;
      continue;
    }
    if (head == "get-model" || head == "get-value") {
      st.problem.wants_model = true;
      continue;
    }
    if (head == "define-fun" || head == "push" || head == "pop" || head == "declare-sort" ||
        head == "define-sort" || head == "get-unsat-core" || head == "get-proof") {
      fail(ParseErrorKind::Unsupported, cmd, "command '" + head + "' is not supported");
    }
    fail(ParseErrorKind::Syntax, cmd, "unknown command '" + head + "'");
  }
  return st.problem;
}

std::string Problem::print() const {
  std::ostringstream os;
  os << "(set-logic QF_NRAT)\n";
  for (const auto& d : declarations) {
    os << "(declare-fun " << d.name << " () " << (d.sort == Sort::Real ? "Real" : "Bool") << ")\n";
  }
  for (const auto& a : assertions) os << "(assert " << to_smt2(a) << ")\n";
  if (has_check_sat) os << "(check-sat)\n";
  if (wants_model) os << "(get-model)\n";
  return os.str();
}

}  // namespace translin
