// SPDX-License-Identifier: Apache-2.0
//
// Test-only high-precision reference evaluator. Independent of the solver's
// poly_approx machinery: fixed-degree exact series with explicit tail bounds
// and outward rounding only.
#pragma once

#include "translin/rational.hpp"
#include "translin/term.hpp"

namespace translin::oracle {

/// Certified enclosure of tf(c) with width <= 10^-digits (exact at c = 0).
void enclose(TransFn fn, const Rational& c, unsigned digits, Rational& lo, Rational& hi);

/// Enclosure of pi from a hardcoded 110-digit reference.
void pi_enclosure(Rational& lo, Rational& hi);

}  // namespace translin::oracle
