// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "translin/formula.hpp"
#include "translin/model.hpp"
#include "translin/problem.hpp"
#include "translin/sexpr.hpp"

namespace translin {

struct BackendConfig {
  std::string command;       // shell command launching the external solver
  int timeout_seconds = 60;  // per check
  std::string logic = "QF_UFLRA";
};

enum class SolveStatus { Sat, Unsat, Unknown, Error };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Error;
  Model model;  // populated on sat, keyed like translin::Model
  std::string diagnostics;
};

struct BackendError : std::runtime_error {
  explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

/// An isolated push/assert/check/pop round, used by the universal-SAT check.
struct FrameRequest {
  std::vector<Declaration> local_decls;
  std::vector<FormulaPtr> formulas;
};

/// SMT(UFLRA) solving interface. Assertions in the main frame only grow;
/// push/pop is reserved for fresh_frame.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual void track_real(const std::string& name) = 0;
  virtual void track_bool(const std::string& name) = 0;
  /// Registers an uninterpreted application term to query with get-value.
  virtual void track_app(const TermPtr& app) = 0;

  virtual void assert_formula(const FormulaPtr& f) = 0;
  virtual SolveOutcome check() = 0;
  virtual SolveOutcome fresh_frame(const FrameRequest& req) = 0;

  /// Commands issued (process) or accepted (mock); for conformance tests.
  virtual const std::vector<std::string>& transcript() const = 0;
};

void assert_lemmas(Backend& b, const std::vector<FormulaPtr>& fs);

/// Parses a solver value s-expression: numerals, decimals, (/ a b), (- t).
Rational parse_smt2_value(const SExpr& e);

/// External-process SMT-LIB2 client over stdin/stdout.
class ProcessBackend : public Backend {
 public:
  explicit ProcessBackend(BackendConfig cfg);
  ~ProcessBackend() override;

  void track_real(const std::string& name) override;
  void track_bool(const std::string& name) override;
  void track_app(const TermPtr& app) override;
  void assert_formula(const FormulaPtr& f) override;
  SolveOutcome check() override;
  SolveOutcome fresh_frame(const FrameRequest& req) override;
  const std::vector<std::string>& transcript() const override;

  bool alive() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Scripted in-memory backend. Replays recorded outcomes and verifies that
/// every scripted sat model actually satisfies the asserted formulas
/// (including uninterpreted-function congruence), so replayed interactions
/// stay honest.
class MockBackend : public Backend {
 public:
  struct Entry {
    enum class Kind { Check, Frame };
    Kind kind = Kind::Check;
    SolveStatus status = SolveStatus::Unknown;
    Model model;
    int repeat = 1;
  };

  explicit MockBackend(std::vector<Entry> script, bool verify_models = true);
  static std::unique_ptr<MockBackend> from_fixture_file(const std::string& path);

  void track_real(const std::string& name) override;
  void track_bool(const std::string& name) override;
  void track_app(const TermPtr& app) override;
  void assert_formula(const FormulaPtr& f) override;
  SolveOutcome check() override;
  SolveOutcome fresh_frame(const FrameRequest& req) override;
  const std::vector<std::string>& transcript() const override;

  int push_count() const { return pushes_; }
  int pop_count() const { return pops_; }
  size_t entries_consumed() const { return consumed_; }

 private:
  const Entry* next_entry(Entry::Kind kind);
  void verify_sat_model(const Entry& e, const FrameRequest* frame);

  std::vector<Entry> script_;
  size_t pos_ = 0;
  int used_of_current_ = 0;
  size_t consumed_ = 0;
  bool verify_models_;
  std::vector<FormulaPtr> asserted_;
  std::vector<std::string> tracked_reals_, tracked_bools_;
  std::vector<TermPtr> tracked_apps_;
  std::vector<std::string> transcript_;
  int pushes_ = 0, pops_ = 0;
};

/// Wraps another backend and captures every check/frame outcome as a mock
/// fixture, written on finalize().
class RecordingBackend : public Backend {
 public:
  RecordingBackend(std::unique_ptr<Backend> inner, std::string out_path);
  ~RecordingBackend() override;

  void track_real(const std::string& name) override;
  void track_bool(const std::string& name) override;
  void track_app(const TermPtr& app) override;
  void assert_formula(const FormulaPtr& f) override;
  SolveOutcome check() override;
  SolveOutcome fresh_frame(const FrameRequest& req) override;
  const std::vector<std::string>& transcript() const override;

  void finalize();

 private:
  std::unique_ptr<Backend> inner_;
  std::string out_path_;
  std::vector<MockBackend::Entry> entries_;
  bool finalized_ = false;
};

}  // namespace translin
