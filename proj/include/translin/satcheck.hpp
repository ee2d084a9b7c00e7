// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "translin/abstraction.hpp"
#include "translin/backend.hpp"
#include "translin/eval.hpp"

namespace translin {

/// The quantifier-free matrix of the negated universal-SAT formula: fresh
/// variables Y stand for the transcendental values at the model's argument
/// points, constrained to certified enclosures; the abstraction, grounded at
/// the model, is negated. Unsatisfiability of the frame certifies
/// satisfiability of the original problem.
FrameRequest build_universal_check(const std::vector<FormulaPtr>& phi_hat,
                                   const AbstractionContext& ctx, const Model& m,
                                   const Rational& eps);

/// Model-lift check: exact-point fast path, otherwise the universal-interval
/// certificate via an isolated backend frame. Backend unknown or error counts
/// as failure (conservative).
bool check_model(const std::vector<FormulaPtr>& phi_hat, const AbstractionContext& ctx,
                 const Model& m, const Rational& eps, Backend& backend);

}  // namespace translin
