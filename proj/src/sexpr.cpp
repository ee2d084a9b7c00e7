// SPDX-License-Identifier: Apache-2.0
#include "translin/sexpr.hpp"

#include <stdexcept>

namespace translin {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  int line = 1;
  int col = 1;

  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  char next() {
    char c = s[i++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!done()) {
      char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') next();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        next();
      } else {
        break;
      }
    }
  }
};

bool symbol_char(char c) {
  if (c >= 'a' && c <= 'z') return true;
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= '0' && c <= '9') return true;
  return std::string("~!@$%^&*_-+=<>.?/").find(c) != std::string::npos;
}

SExpr read_expr(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) throw SexprError("unexpected end of input");
  SExpr e;
  e.line = cur.line;
  e.col = cur.col;
  char c = cur.peek();
  if (c == '(') {
    cur.next();
    while (true) {
      cur.skip_ws();
      if (cur.done()) throw SexprError("unbalanced '(' at " + e.where());
      if (cur.peek() == ')') {
        cur.next();
        break;
      }
      e.items.push_back(read_expr(cur));
    }
    return e;
  }
  if (c == ')') throw SexprError("unexpected ')' at " + e.where());
  if (c == '|') {
    // quoted symbol
    cur.next();
    e.is_atom = true;
    while (!cur.done() && cur.peek() != '|') e.atom.push_back(cur.next());
    if (cur.done()) throw SexprError("unterminated quoted symbol at " + e.where());
    cur.next();
    return e;
  }
  if (c == '"') {
    cur.next();
    e.is_atom = true;
    e.atom.push_back('"');
    while (!cur.done() && cur.peek() != '"') e.atom.push_back(cur.next());
    if (cur.done()) throw SexprError("unterminated string at " + e.where());
    cur.next();
    e.atom.push_back('"');
    return e;
  }
  e.is_atom = true;
  while (!cur.done() && symbol_char(cur.peek())) e.atom.push_back(cur.next());
  if (e.atom.empty()) throw SexprError(std::string("unexpected character '") + c + "' at " + e.where());
  return e;
}

}  // namespace

std::vector<SExpr> read_sexprs(const std::string& text) {
  Cursor cur{text};
  std::vector<SExpr> out;
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    out.push_back(read_expr(cur));
  }
  return out;
}

SExpr read_one_sexpr(const std::string& text) {
  Cursor cur{text};
  SExpr e = read_expr(cur);
  return e;
}

}  // namespace translin
