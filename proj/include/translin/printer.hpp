// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "translin/formula.hpp"
#include "translin/term.hpp"

namespace translin {

/// Canonical SMT-LIB2 rendering. Doubles as the syntactic occurrence key for
/// uninterpreted applications in models, so it must stay deterministic.
std::string to_smt2(const Rational& q);
std::string to_smt2(const TermPtr& t);
std::string to_smt2(const FormulaPtr& f);

/// The reserved symbol the pi approximation is serialized as.
inline const char* pi_symbol_name() { return ".pi"; }

}  // namespace translin
