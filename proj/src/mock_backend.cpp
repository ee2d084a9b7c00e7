// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "translin/backend.hpp"
#include "translin/eval.hpp"
#include "translin/printer.hpp"

namespace translin {

MockBackend::MockBackend(std::vector<Entry> script, bool verify_models)
    : script_(std::move(script)), verify_models_(verify_models) {}

void MockBackend::track_real(const std::string& name) {
  tracked_reals_.push_back(name);
  transcript_.push_back("(declare-fun " + name + " () Real)");
}

void MockBackend::track_bool(const std::string& name) {
  tracked_bools_.push_back(name);
  transcript_.push_back("(declare-fun " + name + " () Bool)");
}

void MockBackend::track_app(const TermPtr& app) { tracked_apps_.push_back(app); }

void MockBackend::assert_formula(const FormulaPtr& f) {
  asserted_.push_back(f);
  transcript_.push_back("(assert " + to_smt2(f) + ")");
}

const MockBackend::Entry* MockBackend::next_entry(Entry::Kind kind) {
  if (pos_ >= script_.size()) throw BackendError("mock script exhausted");
  Entry& e = script_[pos_];
  if (e.kind != kind)
    throw BackendError("mock script mismatch: expected a different operation at entry " +
                       std::to_string(pos_));
  ++used_of_current_;
  ++consumed_;
  const Entry* out = &e;
  if (used_of_current_ >= e.repeat) {
    ++pos_;
    used_of_current_ = 0;
  }
  return out;
}

void MockBackend::verify_sat_model(const Entry& e, const FrameRequest* frame) {
  // Scripted sat outcomes are only replayed when the model genuinely
  // satisfies what has been asserted; this keeps hand-written or recorded
  // fixtures honest.
  const std::vector<FormulaPtr>& formulas = frame ? frame->formulas : asserted_;
  for (const auto& f : formulas) {
    bool ok;
    try {
      ok = evaluate(f, e.model);
    } catch (const EvalError& err) {
      throw BackendError(std::string("mock model incomplete: ") + err.what());
    }
    if (!ok)
      throw BackendError("mock model does not satisfy asserted formula " + to_smt2(f));
  }
  if (frame) return;
  // Uninterpreted-function congruence: equal evaluated arguments must map to
  // equal application values.
  std::map<std::string, std::pair<std::string, Rational>> classes;
  for (const auto& app : tracked_apps_) {
    std::ostringstream sig;
    sig << uf_fn_name(app->uf_fn());
    for (const auto& arg : app->children()) sig << '|' << evaluate(arg, e.model).str();
    Rational v = evaluate(app, e.model);
    auto it = classes.find(sig.str());
    if (it == classes.end()) {
      classes.emplace(sig.str(), std::make_pair(to_smt2(app), v));
    } else if (it->second.second != v) {
      throw BackendError("mock model violates congruence between " + it->second.first +
                         " and " + to_smt2(app));
    }
  }
}

SolveOutcome MockBackend::check() {
  transcript_.push_back("(check-sat)");
  const Entry* e = next_entry(Entry::Kind::Check);
  SolveOutcome out;
  out.status = e->status;
  if (e->status == SolveStatus::Sat) {
    // The returned model carries exactly the tracked symbols.
    for (const auto& r : tracked_reals_) {
      auto it = e->model.reals.find(r);
      if (it == e->model.reals.end())
        throw BackendError("mock fixture missing value for " + r);
      out.model.set(r, it->second);
    }
    for (const auto& app : tracked_apps_) {
      std::string key = to_smt2(app);
      auto it = e->model.reals.find(key);
      if (it == e->model.reals.end())
        throw BackendError("mock fixture missing value for " + key);
      out.model.set(key, it->second);
    }
    for (const auto& b : tracked_bools_) {
      auto it = e->model.bools.find(b);
      if (it == e->model.bools.end())
        throw BackendError("mock fixture missing value for " + b);
      out.model.set(b, it->second);
    }
    if (verify_models_) verify_sat_model(*e, nullptr);
  }
  return out;
}

SolveOutcome MockBackend::fresh_frame(const FrameRequest& req) {
  transcript_.push_back("(push 1)");
  ++pushes_;
  for (const auto& f : req.formulas) transcript_.push_back("(assert " + to_smt2(f) + ")");
  transcript_.push_back("(check-sat)");
  const Entry* e = next_entry(Entry::Kind::Frame);
  SolveOutcome out;
  out.status = e->status;
  out.model = e->model;
  if (e->status == SolveStatus::Sat && verify_models_ && !e->model.reals.empty())
    verify_sat_model(*e, &req);
  transcript_.push_back("(pop 1)");
  ++pops_;
  return out;
}

const std::vector<std::string>& MockBackend::transcript() const { return transcript_; }

namespace {

using nlohmann::json;

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::Unknown: return "unknown";
    case SolveStatus::Error: return "error";
  }
  return "error";
}

SolveStatus status_from(const std::string& s) {
  if (s == "sat") return SolveStatus::Sat;
  if (s == "unsat") return SolveStatus::Unsat;
  if (s == "unknown") return SolveStatus::Unknown;
  return SolveStatus::Error;
}

}  // namespace

std::unique_ptr<MockBackend> MockBackend::from_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BackendError("cannot open fixture " + path);
  json j;
  in >> j;
  std::vector<Entry> entries;
  for (const auto& je : j.at("entries")) {
    Entry e;
    e.kind = je.at("kind").get<std::string>() == "frame" ? Entry::Kind::Frame : Entry::Kind::Check;
    e.status = status_from(je.at("status").get<std::string>());
    e.repeat = je.value("repeat", 1);
    if (je.contains("model")) {
      for (auto it = je["model"].begin(); it != je["model"].end(); ++it)
        e.model.set(it.key(), Rational(it.value().get<std::string>()));
    }
    if (je.contains("bool_model")) {
      for (auto it = je["bool_model"].begin(); it != je["bool_model"].end(); ++it)
        e.model.set(it.key(), it.value().get<bool>());
    }
    entries.push_back(std::move(e));
  }
  return std::make_unique<MockBackend>(std::move(entries));
}

RecordingBackend::RecordingBackend(std::unique_ptr<Backend> inner, std::string out_path)
    : inner_(std::move(inner)), out_path_(std::move(out_path)) {}

RecordingBackend::~RecordingBackend() {
  try {
    finalize();
  } catch (...) {
  }
}

void RecordingBackend::track_real(const std::string& name) { inner_->track_real(name); }
void RecordingBackend::track_bool(const std::string& name) { inner_->track_bool(name); }
void RecordingBackend::track_app(const TermPtr& app) { inner_->track_app(app); }
void RecordingBackend::assert_formula(const FormulaPtr& f) { inner_->assert_formula(f); }

SolveOutcome RecordingBackend::check() {
  SolveOutcome out = inner_->check();
  MockBackend::Entry e;
  e.kind = MockBackend::Entry::Kind::Check;
  e.status = out.status;
  e.model = out.model;
  entries_.push_back(std::move(e));
  return out;
}

SolveOutcome RecordingBackend::fresh_frame(const FrameRequest& req) {
  SolveOutcome out = inner_->fresh_frame(req);
  MockBackend::Entry e;
  e.kind = MockBackend::Entry::Kind::Frame;
  e.status = out.status;
  e.model = out.model;
  entries_.push_back(std::move(e));
  return out;
}

const std::vector<std::string>& RecordingBackend::transcript() const {
  return inner_->transcript();
}

void RecordingBackend::finalize() {
  if (finalized_) return;
  finalized_ = true;
  json j;
  j["entries"] = json::array();
  for (const auto& e : entries_) {
    json je;
    je["kind"] = e.kind == MockBackend::Entry::Kind::Frame ? "frame" : "check";
    je["status"] = status_name(e.status);
    if (!e.model.reals.empty()) {
      json m = json::object();
      for (const auto& [k, v] : e.model.reals) m[k] = v.str();
      je["model"] = m;
    }
    if (!e.model.bools.empty()) {
      json m = json::object();
      for (const auto& [k, v] : e.model.bools) m[k] = v;
      je["bool_model"] = m;
    }
    j["entries"].push_back(je);
  }
  std::ofstream out(out_path_);
  if (!out) throw BackendError("cannot write fixture " + out_path_);
  out << j.dump(1) << "\n";
}

}  // namespace translin
