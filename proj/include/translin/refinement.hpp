// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "translin/abstraction.hpp"
#include "translin/backend.hpp"
#include "translin/bounds.hpp"
#include "translin/eval.hpp"

namespace translin {

enum class LemmaKind { Tangent, SecantPair, Shift, Monotonicity, Nra, PiBound };

const char* lemma_kind_name(LemmaKind k);

/// A refinement lemma with provenance. Every lemma is NTA-valid: true of the
/// real functions under any pi inside the bracket recorded at emission.
struct Lemma {
  FormulaPtr formula;
  LemmaKind kind;
  std::string app_key;  // triggering uf-application ("" for pi bounds)
  Rational center;      // model point that triggered it
  PiBounds pi_at_emission;
  bool falsified_by_trigger = false;  // progress bookkeeping for the harness
};

/// Points at which secant refinement was performed, per application.
class SecantStore {
 public:
  void add(const std::string& app_key, const Rational& c) { points_[app_key].insert(c); }

  const std::set<Rational>& points(const std::string& app_key) const {
    static const std::set<Rational> empty;
    auto it = points_.find(app_key);
    return it == points_.end() ? empty : it->second;
  }

  /// max{p in prev | p < c} respecting an optional clip floor.
  std::optional<Rational> neighbor_below(const std::string& key, const Rational& c,
                                         const std::optional<Rational>& floor) const;
  /// min{p in prev | p > c} respecting an optional clip ceiling.
  std::optional<Rational> neighbor_above(const std::string& key, const Rational& c,
                                         const std::optional<Rational>& ceiling) const;

 private:
  std::map<std::string, std::set<Rational>> points_;
};

struct RefineOutcome {
  bool sat = false;            // the abstract model was certified
  std::vector<Lemma> lemmas;   // Gamma'
  int reached_precision = 0;   // highest precision used by the recursion
  bool needs_more_precision = false;
};

/// The check-refine procedure of the main loop plus the extra refinements.
class Refiner {
 public:
  Refiner(AbstractionContext& ctx, std::vector<FormulaPtr> phi_hat, Backend& backend)
      : ctx_(ctx), phi_hat_(std::move(phi_hat)), backend_(backend) {}

  /// Fig.-2-style spuriousness check and refinement; recurses with increased
  /// precision (up to a cap) when the model survives but cannot be certified.
  RefineOutcome check_refine(const Model& m, int precision, int depth = 0);

  /// Piecewise-linear (tangent or secant-pair) lemmas removing the spurious
  /// point (c, v) of `app` from the abstraction's graph.
  std::vector<Lemma> get_lemmas_point(const FtfApp& app, TransFn fn, const Model& m,
                                      const PolyPair& pair);

  /// exp monotonicity, sin shift, and sin monotonicity lemmas.
  std::vector<Lemma> refine_extra(const Model& m);

  /// Tangent-plane lemmas for multiplication abstractions whose model value
  /// disagrees with the exact product.
  std::vector<Lemma> nra_refine(const Model& m);

  SecantStore& store() { return store_; }
  int universal_checks() const { return universal_checks_; }

  static constexpr int kRecursionCap = 8;

 private:
  Rational simplified_center(const Rational& c, int precision) const;
  std::optional<Lemma> tangent_lemma(const FtfApp& app, TransFn fn, const Rational& c,
                                     const Rational& v, bool below, PolyPair pair);
  std::vector<Lemma> secant_lemmas(const FtfApp& app, TransFn fn, const Rational& c,
                                   const Rational& v, bool below, PolyPair pair);
  Lemma point_pin_lemma(const FtfApp& app, TransFn fn, const Rational& c, const Rational& v,
                        bool below, const PolyPair& pair);

  AbstractionContext& ctx_;
  std::vector<FormulaPtr> phi_hat_;
  Backend& backend_;
  SecantStore store_;
  int universal_checks_ = 0;
};

/// Builds the line a0 + a1*x as a term.
TermPtr line_term(const Rational& a0, const Rational& a1, const TermPtr& x);

/// guard(interval) -> psi, omitting infinite guard sides.
FormulaPtr guarded(const Interval& guard, const TermPtr& x, FormulaPtr psi);

}  // namespace translin
