// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "translin/formula.hpp"
#include "translin/model.hpp"
#include "translin/term.hpp"

namespace translin {

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact evaluation under a model. Transcendental applications must have been
/// abstracted away: a Trans node raises EvalError. Uninterpreted applications
/// are looked up by their syntactic occurrence key.
Rational evaluate(const TermPtr& t, const Model& m);
bool evaluate(const FormulaPtr& f, const Model& m);

/// Simultaneous substitution. Keys of `terms` are variable names, the pi
/// symbol name, or uf-application occurrence keys; `bools` maps Boolean
/// variable names to replacement formulas.
struct Substitution {
  std::map<std::string, TermPtr> terms;
  std::map<std::string, FormulaPtr> bools;
};

TermPtr substitute(const TermPtr& t, const Substitution& sigma);
FormulaPtr substitute(const FormulaPtr& f, const Substitution& sigma);

}  // namespace translin
