// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "translin/backend.hpp"
#include "translin/problem.hpp"
#include "translin/refinement.hpp"

namespace translin {

struct SolverConfig {
  int initial_precision = 2;  // eps = 10^-precision
  int bump_period = 4;        // iterations between scheduled precision bumps
  int max_iterations = 200;
  int wall_clock_seconds = 60;
};

enum class SolveResultStatus { Sat, Unsat, Unknown };
enum class UnknownReason { None, Budget, PrecisionCeiling, BackendUnknown };

const char* unknown_reason_name(UnknownReason r);

struct SolverResult {
  SolveResultStatus status = SolveResultStatus::Unknown;
  UnknownReason reason = UnknownReason::None;
  std::string diagnostics;

  // Populated on sat: values of the user-declared symbols plus certified
  // enclosures for every transcendental application.
  std::map<std::string, Rational> model_reals;
  std::map<std::string, bool> model_bools;
  struct Enclosure {
    std::string app_key;
    Rational lb, ub;
  };
  std::vector<Enclosure> enclosures;

  struct Stats {
    int iterations = 0;
    int final_precision = 0;
    int backend_checks = 0;
    int universal_checks = 0;
    std::map<std::string, int> lemmas_by_kind;
  } stats;

  std::vector<Lemma> lemmas;  // emission order, deduplicated
};

/// Precision schedule: +1 every bump_period iterations, and never below what
/// the refinement recursion already reached.
int maybe_increase_precision(int precision, int iteration, int bump_period,
                             int reached_precision);

/// The abstraction-refinement loop: abstract, check, refine, repeat, with
/// precision scheduling and iteration/wall-clock budgets.
SolverResult solve(const Problem& parsed, const SolverConfig& cfg, Backend& backend);

}  // namespace translin
