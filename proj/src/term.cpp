// SPDX-License-Identifier: Apache-2.0
#include "translin/term.hpp"

#include <stdexcept>

namespace translin {

namespace {
size_t combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

const char* trans_fn_name(TransFn fn) {
  switch (fn) {
    case TransFn::Exp: return "exp";
    case TransFn::Sin: return "sin";
    case TransFn::Cos: return "cos";
    case TransFn::Tan: return "tan";
    case TransFn::Log: return "log";
    case TransFn::Asin: return "asin";
    case TransFn::Acos: return "acos";
    case TransFn::Atan: return "atan";
  }
  return "?";
}

const char* uf_fn_name(UfFn fn) {
  switch (fn) {
    case UfFn::Fexp: return ".fexp";
    case UfFn::Fsin: return ".fsin";
    case UfFn::Fmul: return ".fmul";
  }
  return "?";
}

void Term::compute_hash() {
  size_t h = static_cast<size_t>(kind_) * 0x51ed2701;
  switch (kind_) {
    case TermKind::Variable: h = combine(h, std::hash<std::string>{}(name_)); break;
    case TermKind::Constant: h = combine(h, value_.hash()); break;
    case TermKind::Pi: break;
    case TermKind::Trans: h = combine(h, static_cast<size_t>(tfn_)); break;
    case TermKind::Uf: h = combine(h, static_cast<size_t>(ufn_)); break;
    case TermKind::Pow: h = combine(h, exponent_); break;
    default: break;
  }
  for (const auto& c : children_) h = combine(h, c->hash());
  hash_ = h;
}

TermPtr Term::var(std::string name) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Variable;
  t->name_ = std::move(name);
  t->compute_hash();
  return t;
}

TermPtr Term::constant(Rational value) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Constant;
  t->value_ = std::move(value);
  t->compute_hash();
  return t;
}

TermPtr Term::pi() {
  static const TermPtr instance = [] {
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = TermKind::Pi;
    t->compute_hash();
    return TermPtr(t);
  }();
  return instance;
}

TermPtr Term::sum(std::vector<TermPtr> children) {
  if (children.empty()) return constant(Rational(0));
  if (children.size() == 1) return children.front();
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Sum;
  t->children_ = std::move(children);
  t->compute_hash();
  return t;
}

TermPtr Term::neg(TermPtr child) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Neg;
  t->children_ = {std::move(child)};
  t->compute_hash();
  return t;
}

TermPtr Term::product(TermPtr lhs, TermPtr rhs) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Product;
  t->children_ = {std::move(lhs), std::move(rhs)};
  t->compute_hash();
  return t;
}

TermPtr Term::pow(TermPtr base, unsigned exponent) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Pow;
  t->exponent_ = exponent;
  t->children_ = {std::move(base)};
  t->compute_hash();
  return t;
}

TermPtr Term::trans(TransFn fn, TermPtr arg) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Trans;
  t->tfn_ = fn;
  t->children_ = {std::move(arg)};
  t->compute_hash();
  return t;
}

TermPtr Term::uf(UfFn fn, std::vector<TermPtr> args) {
  size_t expected = fn == UfFn::Fmul ? 2 : 1;
  if (args.size() != expected) throw std::invalid_argument("Term::uf: wrong arity");
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Uf;
  t->ufn_ = fn;
  t->children_ = std::move(args);
  t->compute_hash();
  return t;
}

TermPtr Term::sub(TermPtr lhs, TermPtr rhs) {
  return sum({std::move(lhs), neg(std::move(rhs))});
}

TermPtr Term::scaled(const Rational& coeff, TermPtr t) {
  if (coeff == Rational(1)) return t;
  return product(constant(coeff), std::move(t));
}

bool Term::equals(const Term& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || hash_ != other.hash_) return false;
  switch (kind_) {
    case TermKind::Variable:
      if (name_ != other.name_) return false;
      break;
    case TermKind::Constant:
      if (value_ != other.value_) return false;
      break;
    case TermKind::Trans:
      if (tfn_ != other.tfn_) return false;
      break;
    case TermKind::Uf:
      if (ufn_ != other.ufn_) return false;
      break;
    case TermKind::Pow:
      if (exponent_ != other.exponent_) return false;
      break;
    default:
      break;
  }
  if (children_.size() != other.children_.size()) return false;
  for (size_t i = 0; i < children_.size(); ++i) {
    if (!children_[i]->equals(*other.children_[i])) return false;
  }
  return true;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->equals(*b);
}

}  // namespace translin
