// SPDX-License-Identifier: Apache-2.0
#include "translin/driver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "translin/printer.hpp"
#include "translin/rewrite.hpp"
#include "translin/satcheck.hpp"

namespace translin {

int maybe_increase_precision(int precision, int iteration, int bump_period,
                             int reached_precision) {
  int scheduled = precision + ((iteration % bump_period == 0) ? 1 : 0);
  return std::max(scheduled, reached_precision);
}

const char* unknown_reason_name(UnknownReason r) {
  switch (r) {
    case UnknownReason::None: return "none";
    case UnknownReason::Budget: return "budget";
    case UnknownReason::PrecisionCeiling: return "precision-ceiling";
    case UnknownReason::BackendUnknown: return "backend-unknown";
  }
  return "?";
}

SolverResult solve(const Problem& parsed, const SolverConfig& cfg, Backend& backend) {
  SolverResult res;
  auto t_start = std::chrono::steady_clock::now();
  auto budget_exhausted = [&] {
    return std::chrono::steady_clock::now() - t_start >=
           std::chrono::seconds(cfg.wall_clock_seconds);
  };

  Problem p = normalize(parsed);
  Abstraction abs = initial_abstraction(p);

  for (const auto& name : abs.ctx.tracked_reals) backend.track_real(name);
  for (const auto& app : abs.ctx.tracked_apps) backend.track_app(app);
  for (const auto& name : abs.ctx.tracked_bools) backend.track_bool(name);
  for (const auto& f : abs.conjuncts) backend.assert_formula(f);
  for (const auto& f : abs.axioms) backend.assert_formula(f);

  Refiner refiner(abs.ctx, abs.all(), backend);

  std::unordered_set<FormulaPtr, FormulaPtrHash, FormulaPtrEq> gamma;
  int precision = cfg.initial_precision;
  res.stats.final_precision = precision;

  for (int iter = 1;; ++iter) {
    if (iter > cfg.max_iterations || budget_exhausted()) {
      res.status = SolveResultStatus::Unknown;
      res.reason = UnknownReason::Budget;
      break;
    }
    res.stats.iterations = iter;

    SolveOutcome out = backend.check();
    ++res.stats.backend_checks;
    if (out.status == SolveStatus::Unsat) {
      res.status = SolveResultStatus::Unsat;
      break;
    }
    if (out.status != SolveStatus::Sat) {
      res.status = SolveResultStatus::Unknown;
      res.reason = UnknownReason::BackendUnknown;
      res.diagnostics = out.diagnostics;
      break;
    }

    RefineOutcome ro;
    try {
      ro = refiner.check_refine(out.model, precision);
    } catch (const PiTableExhausted&) {
      res.status = SolveResultStatus::Unknown;
      res.reason = UnknownReason::PrecisionCeiling;
      break;
    }
    res.stats.universal_checks = refiner.universal_checks();

    if (ro.sat) {
      res.status = SolveResultStatus::Sat;
      res.stats.final_precision = std::max(precision, ro.reached_precision);
      Rational eps = Rational(1) / Rational(10).pow(
          static_cast<unsigned long>(res.stats.final_precision));
      for (const auto& d : parsed.declarations) {
        if (d.sort == Sort::Real && out.model.has_real(d.name))
          res.model_reals[d.name] = out.model.reals.at(d.name);
        if (d.sort == Sort::Bool && out.model.has_bool(d.name))
          res.model_bools[d.name] = out.model.bools.at(d.name);
      }
      auto add_enclosure = [&](const FtfApp& app, TransFn fn) {
        Rational c = out.model.reals.at(app.arg->name());
        Rational lb, ub;
        cert_enclosure(fn, c, eps, lb, ub);
        res.enclosures.push_back({to_smt2(app.app), lb, ub});
      };
      for (const auto& e : abs.ctx.fexp_apps) add_enclosure(e, TransFn::Exp);
      for (const auto& s : abs.ctx.fsin_ext) add_enclosure(s, TransFn::Sin);
      for (const auto& s : abs.ctx.fsin_base) add_enclosure(s, TransFn::Sin);
      break;
    }

    precision = maybe_increase_precision(precision, iter, cfg.bump_period,
                                         ro.reached_precision);
    res.stats.final_precision = precision;

    std::vector<Lemma> extra;
    try {
      extra = refiner.refine_extra(out.model);
    } catch (const EvalError& e) {
      res.status = SolveResultStatus::Unknown;
      res.reason = UnknownReason::BackendUnknown;
      res.diagnostics = e.what();
      break;
    }

    std::vector<FormulaPtr> fresh;
    auto take = [&](std::vector<Lemma>& ls) {
      for (auto& lem : ls) {
        if (gamma.insert(lem.formula).second) {
          fresh.push_back(lem.formula);
          ++res.stats.lemmas_by_kind[lemma_kind_name(lem.kind)];
          res.lemmas.push_back(std::move(lem));
        }
      }
    };
    take(ro.lemmas);
    take(extra);
    assert_lemmas(backend, fresh);
  }
  return res;
}

}  // namespace translin
