// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "translin/problem.hpp"

namespace translin {

/// Rewrites cos/tan/log/asin/acos/atan/pow occurrences so only exp and sin
/// remain, conjoining the relational side constraints of each rule.
Problem rewrite_transcendental(const Problem& p);

/// Replaces every transcendental application tf(t) with non-variable t by
/// tf(y) for a fresh y, conjoining y = t. Idempotent.
Problem flatten(const Problem& p);

/// rewrite + flatten.
Problem normalize(const Problem& p);

}  // namespace translin
