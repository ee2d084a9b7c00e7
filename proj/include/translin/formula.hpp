// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "translin/term.hpp"

namespace translin {

enum class FormulaKind { Atom, Not, And, Or, Implies, Iff, BoolVar, True, False };

enum class RelOp { Lt, Le, Eq, Ge, Gt };

const char* rel_op_name(RelOp op);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  static FormulaPtr atom(RelOp op, TermPtr lhs, TermPtr rhs);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(std::vector<FormulaPtr> fs);
  static FormulaPtr disj(std::vector<FormulaPtr> fs);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr bool_var(std::string name);
  static FormulaPtr truth(bool b);

  // Frequent atom shapes.
  static FormulaPtr le(TermPtr a, TermPtr b) { return atom(RelOp::Le, std::move(a), std::move(b)); }
  static FormulaPtr lt(TermPtr a, TermPtr b) { return atom(RelOp::Lt, std::move(a), std::move(b)); }
  static FormulaPtr ge(TermPtr a, TermPtr b) { return atom(RelOp::Ge, std::move(a), std::move(b)); }
  static FormulaPtr gt(TermPtr a, TermPtr b) { return atom(RelOp::Gt, std::move(a), std::move(b)); }
  static FormulaPtr eq(TermPtr a, TermPtr b) { return atom(RelOp::Eq, std::move(a), std::move(b)); }
  /// l <= t <= u as a conjunction.
  static FormulaPtr between(TermPtr l, TermPtr t, TermPtr u);

  FormulaKind kind() const { return kind_; }
  RelOp rel() const { return rel_; }
  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }
  const std::string& name() const { return name_; }
  const std::vector<FormulaPtr>& children() const { return children_; }
  const FormulaPtr& child(size_t i) const { return children_[i]; }

  size_t hash() const { return hash_; }
  bool equals(const Formula& other) const;

 private:
  Formula() = default;

  FormulaKind kind_{};
  RelOp rel_{};
  TermPtr lhs_, rhs_;
  std::string name_;
  std::vector<FormulaPtr> children_;
  size_t hash_ = 0;

  void compute_hash();
};

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaPtrHash {
  size_t operator()(const FormulaPtr& f) const { return f ? f->hash() : 0; }
};
struct FormulaPtrEq {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return formula_equal(a, b); }
};

}  // namespace translin
