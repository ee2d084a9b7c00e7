// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "translin/bounds.hpp"
#include "translin/formula.hpp"
#include "translin/problem.hpp"

namespace translin {

/// Bracket pairs of pi with strictly decreasing widths, validated offline
/// against a high-precision reference (see tests).
const std::vector<PiBounds>& pi_convergent_table();

struct PiTableExhausted : std::runtime_error {
  PiTableExhausted() : std::runtime_error("pi approximation table exhausted") {}
};

/// One tracked transcendental abstraction occurrence.
struct FtfApp {
  TermPtr app;   // (.fexp x) or (.fsin x)
  UfFn fn;
  TermPtr arg;   // always a variable after flattening
  // For extended sin applications: the associated base machinery.
  TermPtr base_var;  // y_x
  TermPtr base_app;  // (.fsin y_x)
};

struct FmulApp {
  TermPtr app;  // (.fmul t1 t2)
};

/// The phi -> phi-hat mapping: application registries, base variables, the
/// pi symbol's current rational bracket, and the abstracted conjunct list.
class AbstractionContext {
 public:
  std::vector<FtfApp> fexp_apps;
  std::vector<FtfApp> fsin_ext;   // original sin occurrences
  std::vector<FtfApp> fsin_base;  // artificial base-period occurrences
  std::vector<FmulApp> fmul_apps;

  bool uses_pi = false;

  const PiBounds& pi() const { return pi_; }
  size_t pi_level() const { return pi_index_; }

  /// Advances to the next, strictly tighter bracket and returns it.
  /// Throws PiTableExhausted at the precision ceiling.
  PiBounds refine_pi();

  /// Every uf-application occurrence in the abstraction, in first-seen order
  /// (includes mirrors like fsin(-y) from the symmetry axiom).
  std::vector<TermPtr> tracked_apps;
  /// All real symbols of the abstraction: problem variables, fresh base
  /// variables, and the pi symbol when used.
  std::vector<std::string> tracked_reals;
  std::vector<std::string> tracked_bools;

 private:
  PiBounds pi_ = pi_convergent_table().front();
  size_t pi_index_ = 0;
};

struct Abstraction {
  std::vector<FormulaPtr> conjuncts;  // abstracted assertions + base constraints
  std::vector<FormulaPtr> axioms;     // initial axiom instances
  AbstractionContext ctx;

  std::vector<FormulaPtr> all() const {
    std::vector<FormulaPtr> out = conjuncts;
    out.insert(out.end(), axioms.begin(), axioms.end());
    return out;
  }
  FormulaPtr formula() const { return Formula::conj(all()); }
};

/// Builds the UFLRA abstraction of a rewritten, flattened problem:
/// transcendental applications become uninterpreted ones, nonlinear products
/// become fmul, sin gains base variables and period constraints, pi gets its
/// initial bracket, and the initial axioms are conjoined.
Abstraction initial_abstraction(const Problem& p);

/// The initial axiom instances for a built context (exposed for tests).
std::vector<FormulaPtr> initial_axioms(const AbstractionContext& ctx);

}  // namespace translin
