// SPDX-License-Identifier: Apache-2.0
#include "translin/backend.hpp"

namespace translin {

void assert_lemmas(Backend& b, const std::vector<FormulaPtr>& fs) {
  for (const auto& f : fs) b.assert_formula(f);
}

Rational parse_smt2_value(const SExpr& e) {
  if (e.is_atom) {
    const std::string& a = e.atom;
    if (a.empty()) throw BackendError("protocol-error: empty value");
    if (a.find('.') != std::string::npos) return Rational::from_decimal_string(a);
    // accept a leading minus in atom form as some solvers print -5
    return Rational(a);
  }
  if (e.size() == 2 && e[0].is_atom && e[0].atom == "-") {
    return -parse_smt2_value(e[1]);
  }
  if (e.size() == 3 && e[0].is_atom && e[0].atom == "/") {
    Rational d = parse_smt2_value(e[2]);
    if (d.is_zero()) throw BackendError("protocol-error: zero denominator in value");
    return parse_smt2_value(e[1]) / d;
  }
  throw BackendError("protocol-error: unparseable value s-expression");
}

}  // namespace translin
