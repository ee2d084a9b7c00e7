// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "translin/formula.hpp"

namespace translin {

enum class Sort { Real, Bool };

struct Declaration {
  std::string name;
  Sort sort;
};

/// A parsed input script: 0-ary declarations, the asserted formulas, and
/// script metadata.
struct Problem {
  std::vector<Declaration> declarations;
  std::vector<FormulaPtr> assertions;
  bool has_check_sat = false;
  bool wants_model = false;
  std::string source_name;
  unsigned fresh_counter = 0;  // used by rewrite/flatten for fresh symbols

  bool is_declared(const std::string& name) const {
    for (const auto& d : declarations)
      if (d.name == name) return true;
    return false;
  }

  FormulaPtr assertion() const { return Formula::conj(assertions); }

  /// Canonical script rendering; parse(print(p)) is structurally identical.
  std::string print() const;
};

}  // namespace translin
