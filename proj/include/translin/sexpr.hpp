// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace translin {

/// Minimal s-expression tree with source positions, shared by the SMT-LIB2
/// frontend and the backend reply parser.
struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;

  const SExpr& operator[](size_t i) const { return items[i]; }
  size_t size() const { return items.size(); }
  std::string where() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct SexprError : std::runtime_error {
  explicit SexprError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses every top-level s-expression in `text`. Comments (;) are skipped.
std::vector<SExpr> read_sexprs(const std::string& text);

/// Parses exactly one s-expression.
SExpr read_one_sexpr(const std::string& text);

}  // namespace translin
