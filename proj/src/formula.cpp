// SPDX-License-Identifier: Apache-2.0
#include "translin/formula.hpp"

namespace translin {

namespace {
size_t combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

const char* rel_op_name(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Eq: return "=";
    case RelOp::Ge: return ">=";
    case RelOp::Gt: return ">";
  }
  return "?";
}

void Formula::compute_hash() {
  size_t h = static_cast<size_t>(kind_) * 0x2545f491;
  switch (kind_) {
    case FormulaKind::Atom:
      h = combine(h, static_cast<size_t>(rel_));
      h = combine(h, lhs_->hash());
      h = combine(h, rhs_->hash());
      break;
    case FormulaKind::BoolVar:
      h = combine(h, std::hash<std::string>{}(name_));
      break;
    default:
      break;
  }
  for (const auto& c : children_) h = combine(h, c->hash());
  hash_ = h;
}

FormulaPtr Formula::atom(RelOp op, TermPtr lhs, TermPtr rhs) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::Atom;
  f->rel_ = op;
  f->lhs_ = std::move(lhs);
  f->rhs_ = std::move(rhs);
  f->compute_hash();
  return f;
}

FormulaPtr Formula::negation(FormulaPtr g) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::Not;
  f->children_ = {std::move(g)};
  f->compute_hash();
  return f;
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return truth(true);
  if (fs.size() == 1) return fs.front();
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::And;
  f->children_ = std::move(fs);
  f->compute_hash();
  return f;
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return truth(false);
  if (fs.size() == 1) return fs.front();
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::Or;
  f->children_ = std::move(fs);
  f->compute_hash();
  return f;
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::Implies;
  f->children_ = {std::move(a), std::move(b)};
  f->compute_hash();
  return f;
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::Iff;
  f->children_ = {std::move(a), std::move(b)};
  f->compute_hash();
  return f;
}

FormulaPtr Formula::bool_var(std::string name) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = FormulaKind::BoolVar;
  f->name_ = std::move(name);
  f->compute_hash();
  return f;
}

FormulaPtr Formula::truth(bool b) {
  static const FormulaPtr t = [] {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = FormulaKind::True;
    f->compute_hash();
    return FormulaPtr(f);
  }();
  static const FormulaPtr fa = [] {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = FormulaKind::False;
    f->compute_hash();
    return FormulaPtr(f);
  }();
  return b ? t : fa;
}

FormulaPtr Formula::between(TermPtr l, TermPtr t, TermPtr u) {
  return conj({le(std::move(l), t), le(t, std::move(u))});
}

bool Formula::equals(const Formula& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || hash_ != other.hash_) return false;
  switch (kind_) {
    case FormulaKind::Atom:
      if (rel_ != other.rel_) return false;
      if (!lhs_->equals(*other.lhs_) || !rhs_->equals(*other.rhs_)) return false;
      break;
    case FormulaKind::BoolVar:
      if (name_ != other.name_) return false;
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

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->equals(*b);
}

}  // namespace translin
