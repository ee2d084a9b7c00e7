// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "translin/rational.hpp"

namespace translin {

enum class TermKind {
  Variable,   // real-sorted 0-ary symbol
  Constant,   // exact rational literal
  Pi,         // the symbolic pi approximation (one shared node)
  Sum,        // n-ary addition
  Neg,        // unary negation
  Product,    // binary multiplication
  Pow,        // integer power, eliminated by the rewriter
  Trans,      // transcendental application
  Uf          // uninterpreted abstraction (fexp, fsin, fmul)
};

enum class TransFn { Exp, Sin, Cos, Tan, Log, Asin, Acos, Atan };
enum class UfFn { Fexp, Fsin, Fmul };

const char* trans_fn_name(TransFn fn);
const char* uf_fn_name(UfFn fn);  // ".fexp", ".fsin", ".fmul"

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  static TermPtr var(std::string name);
  static TermPtr constant(Rational value);
  static TermPtr pi();
  static TermPtr sum(std::vector<TermPtr> children);
  static TermPtr neg(TermPtr child);
  static TermPtr product(TermPtr lhs, TermPtr rhs);
  static TermPtr pow(TermPtr base, unsigned exponent);
  static TermPtr trans(TransFn fn, TermPtr arg);
  static TermPtr uf(UfFn fn, std::vector<TermPtr> args);

  // Convenience builders.
  static TermPtr sub(TermPtr lhs, TermPtr rhs);
  static TermPtr scaled(const Rational& coeff, TermPtr t);  // coeff * t

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Rational& value() const { return value_; }
  TransFn trans_fn() const { return tfn_; }
  UfFn uf_fn() const { return ufn_; }
  unsigned exponent() const { return exponent_; }
  const std::vector<TermPtr>& children() const { return children_; }
  const TermPtr& child(size_t i) const { return children_[i]; }

  size_t hash() const { return hash_; }
  bool equals(const Term& other) const;

 private:
  Term() = default;

  TermKind kind_{};
  std::string name_;
  Rational value_;
  TransFn tfn_{};
  UfFn ufn_{};
  unsigned exponent_ = 0;
  std::vector<TermPtr> children_;
  size_t hash_ = 0;

  void compute_hash();
};

bool term_equal(const TermPtr& a, const TermPtr& b);

}  // namespace translin
