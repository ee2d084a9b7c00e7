// SPDX-License-Identifier: Apache-2.0
#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <set>
#include <sstream>

#include "translin/backend.hpp"
#include "translin/printer.hpp"

namespace translin {

namespace {

void collect_symbols(const TermPtr& t, std::set<std::string>& reals, std::set<UfFn>& ufs) {
  switch (t->kind()) {
    case TermKind::Variable: reals.insert(t->name()); break;
    case TermKind::Pi: reals.insert(pi_symbol_name()); break;
    case TermKind::Uf: ufs.insert(t->uf_fn()); break;
    default: break;
  }
  for (const auto& c : t->children()) collect_symbols(c, reals, ufs);
}

void collect_symbols(const FormulaPtr& f, std::set<std::string>& reals,
                     std::set<std::string>& bools, std::set<UfFn>& ufs) {
  if (f->kind() == FormulaKind::Atom) {
    collect_symbols(f->lhs(), reals, ufs);
    collect_symbols(f->rhs(), reals, ufs);
    return;
  }
  if (f->kind() == FormulaKind::BoolVar) {
    bools.insert(f->name());
    return;
  }
  for (const auto& c : f->children()) collect_symbols(c, reals, bools, ufs);
}

}  // namespace

struct ProcessBackend::Impl {
  BackendConfig cfg;
  pid_t pid = -1;
  int to_child = -1;    // write end
  int from_child = -1;  // read end
  bool dead = false;
  std::string read_buffer;

  std::set<std::string> declared_reals, declared_bools;
  std::set<UfFn> declared_ufs;
  // Declarations made inside an open frame get forgotten at pop.
  std::vector<std::string> frame_reals, frame_bools;
  std::vector<UfFn> frame_ufs;

  std::vector<std::string> tracked_reals, tracked_bools;
  std::vector<TermPtr> tracked_apps;
  std::set<std::string> tracked_keys;

  std::vector<std::string> transcript;

  void launch() {
    int in_pipe[2], out_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) throw BackendError("pipe() failed");
    pid = fork();
    if (pid < 0) throw BackendError("fork() failed");
    if (pid == 0) {
      dup2(in_pipe[0], STDIN_FILENO);
      dup2(out_pipe[1], STDOUT_FILENO);
      close(in_pipe[0]); close(in_pipe[1]);
      close(out_pipe[0]); close(out_pipe[1]);
      execl("/bin/sh", "sh", "-c", cfg.command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    to_child = in_pipe[1];
    from_child = out_pipe[0];
    send("(set-option :print-success false)");
    send("(set-option :produce-models true)");
    send("(set-logic " + cfg.logic + ")");
  }

  void kill_child() {
    if (pid > 0) {
      kill(pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      pid = -1;
    }
    if (to_child >= 0) { close(to_child); to_child = -1; }
    if (from_child >= 0) { close(from_child); from_child = -1; }
    dead = true;
  }

  void send(const std::string& line) {
    if (dead) throw BackendError("process-death: backend no longer running");
    transcript.push_back(line);
    std::string with_nl = line + "\n";
    const char* p = with_nl.data();
    size_t left = with_nl.size();
    while (left > 0) {
      ssize_t w = write(to_child, p, left);
      if (w <= 0) {
        kill_child();
        throw BackendError("process-death: write failed");
      }
      p += w;
      left -= static_cast<size_t>(w);
    }
  }

  // Reads until `done(read_buffer)` returns a prefix length, honoring the
  // per-check deadline. Returns that prefix and trims the buffer.
  template <typename DoneFn>
  std::string read_until(DoneFn done) {
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(cfg.timeout_seconds);
    while (true) {
      size_t n = done(read_buffer);
      if (n != std::string::npos) {
        std::string out = read_buffer.substr(0, n);
        read_buffer.erase(0, n);
        return out;
      }
      auto now = std::chrono::steady_clock::now();
      if (now >= deadline) {
        kill_child();
        throw BackendError("timeout");
      }
      int ms = static_cast<int>(
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count());
      struct pollfd pfd{from_child, POLLIN, 0};
      int pr = poll(&pfd, 1, ms > 0 ? ms : 1);
      if (pr < 0) {
        kill_child();
        throw BackendError("process-death: poll failed");
      }
      if (pr == 0) continue;
      char buf[4096];
      ssize_t r = read(from_child, buf, sizeof(buf));
      if (r <= 0) {
        kill_child();
        throw BackendError("process-death: backend closed its output");
      }
      read_buffer.append(buf, static_cast<size_t>(r));
    }
  }

  std::string read_line() {
    std::string line = read_until([](const std::string& b) {
      size_t p = b.find('\n');
      return p == std::string::npos ? std::string::npos : p + 1;
    });
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
  }

  // One complete top-level s-expression (for get-value replies).
  std::string read_sexpr_text() {
    return read_until([](const std::string& b) -> size_t {
      int depth = 0;
      bool seen = false;
      for (size_t i = 0; i < b.size(); ++i) {
        char c = b[i];
        if (c == '(') { ++depth; seen = true; }
        else if (c == ')') {
          --depth;
          if (seen && depth == 0) return i + 1;
        } else if (!seen && c != ' ' && c != '\n' && c != '\r' && c != '\t') {
          // non-parenthesized token (e.g. an error word): take the line
          size_t nl = b.find('\n', i);
          return nl == std::string::npos ? std::string::npos : nl + 1;
        }
      }
      return std::string::npos;
    });
  }

  void declare_for(const FormulaPtr& f, bool in_frame) {
    std::set<std::string> reals, bools;
    std::set<UfFn> ufs;
    collect_symbols(f, reals, bools, ufs);
    for (UfFn fn : ufs) {
      if (declared_ufs.insert(fn).second) {
        std::string sig = fn == UfFn::Fmul ? "(Real Real)" : "(Real)";
        send(std::string("(declare-fun ") + uf_fn_name(fn) + " " + sig + " Real)");
        if (in_frame) frame_ufs.push_back(fn);
      }
    }
    for (const auto& r : reals) {
      if (declared_reals.insert(r).second) {
        send("(declare-fun " + r + " () Real)");
        if (in_frame) frame_reals.push_back(r);
      }
    }
    for (const auto& b : bools) {
      if (declared_bools.insert(b).second) {
        send("(declare-fun " + b + " () Bool)");
        if (in_frame) frame_bools.push_back(b);
      }
    }
  }

  SolveOutcome run_check(bool with_values) {
    send("(check-sat)");
    std::string ans = read_line();
    while (ans.empty()) ans = read_line();
    SolveOutcome out;
    if (ans == "sat") out.status = SolveStatus::Sat;
    else if (ans == "unsat") out.status = SolveStatus::Unsat;
    else if (ans == "unknown") out.status = SolveStatus::Unknown;
    else {
      out.status = SolveStatus::Error;
      out.diagnostics = "protocol-error: unexpected reply '" + ans + "'";
      return out;
    }
    if (out.status == SolveStatus::Sat && with_values) fetch_values(out);
    return out;
  }

  void fetch_values(SolveOutcome& out) {
    std::vector<std::string> keys;
    std::ostringstream q;
    q << "(get-value (";
    bool first = true;
    auto add = [&](const std::string& k) {
      if (!first) q << ' ';
      first = false;
      q << k;
      keys.push_back(k);
    };
    for (const auto& r : tracked_reals) add(r);
    for (const auto& a : tracked_apps) add(to_smt2(a));
    for (const auto& b : tracked_bools) add(b);
    q << "))";
    if (keys.empty()) return;
    send(q.str());
    std::string reply = read_sexpr_text();
    SExpr tree;
    try {
      tree = read_one_sexpr(reply);
    } catch (const SexprError& e) {
      throw BackendError(std::string("protocol-error: ") + e.what());
    }
    if (tree.is_atom || tree.size() != keys.size())
      throw BackendError("protocol-error: get-value arity mismatch");
    size_t nbools_start = tracked_reals.size() + tracked_apps.size();
    for (size_t i = 0; i < tree.size(); ++i) {
      const SExpr& pair = tree[i];
      if (pair.is_atom || pair.size() != 2)
        throw BackendError("protocol-error: malformed value pair");
      const SExpr& val = pair[1];
      if (i < nbools_start) {
        out.model.set(keys[i], parse_smt2_value(val));
      } else {
        if (!val.is_atom || (val.atom != "true" && val.atom != "false"))
          throw BackendError("protocol-error: expected boolean value");
        out.model.set(keys[i], val.atom == "true");
      }
    }
  }
};

ProcessBackend::ProcessBackend(BackendConfig cfg) : impl_(new Impl{}) {
  impl_->cfg = std::move(cfg);
  impl_->launch();
}

ProcessBackend::~ProcessBackend() {
  if (!impl_->dead && impl_->pid > 0) {
    try {
      impl_->send("(exit)");
    } catch (...) {
    }
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      pid_t r = waitpid(impl_->pid, &status, WNOHANG);
      if (r == impl_->pid) { impl_->pid = -1; break; }
      usleep(10000);
    }
    impl_->kill_child();
  }
}

bool ProcessBackend::alive() const { return !impl_->dead; }

void ProcessBackend::track_real(const std::string& name) {
  if (impl_->tracked_keys.insert(name).second) impl_->tracked_reals.push_back(name);
  if (impl_->declared_reals.insert(name).second)
    impl_->send("(declare-fun " + name + " () Real)");
}

void ProcessBackend::track_bool(const std::string& name) {
  if (impl_->tracked_keys.insert(name).second) impl_->tracked_bools.push_back(name);
  if (impl_->declared_bools.insert(name).second)
    impl_->send("(declare-fun " + name + " () Bool)");
}

void ProcessBackend::track_app(const TermPtr& app) {
  std::string key = to_smt2(app);
  if (impl_->tracked_keys.insert(key).second) impl_->tracked_apps.push_back(app);
}

void ProcessBackend::assert_formula(const FormulaPtr& f) {
  impl_->declare_for(f, false);
  impl_->send("(assert " + to_smt2(f) + ")");
}

SolveOutcome ProcessBackend::check() {
  try {
    return impl_->run_check(true);
  } catch (const BackendError& e) {
    SolveOutcome out;
    out.status = std::string(e.what()) == "timeout" ? SolveStatus::Unknown : SolveStatus::Error;
    out.diagnostics = e.what();
    return out;
  }
}

SolveOutcome ProcessBackend::fresh_frame(const FrameRequest& req) {
  try {
    impl_->send("(push 1)");
    for (const auto& d : req.local_decls) {
      const char* sort = d.sort == Sort::Real ? "Real" : "Bool";
      impl_->send("(declare-fun " + d.name + " () " + std::string(sort) + ")");
      impl_->declared_reals.insert(d.name);
      impl_->frame_reals.push_back(d.name);
    }
    for (const auto& f : req.formulas) {
      impl_->declare_for(f, true);
      impl_->send("(assert " + to_smt2(f) + ")");
    }
    impl_->send("(check-sat)");
    std::string ans = impl_->read_line();
    while (ans.empty()) ans = impl_->read_line();
    SolveOutcome out;
    if (ans == "sat") out.status = SolveStatus::Sat;
    else if (ans == "unsat") out.status = SolveStatus::Unsat;
    else if (ans == "unknown") out.status = SolveStatus::Unknown;
    else {
      out.status = SolveStatus::Error;
      out.diagnostics = "protocol-error: unexpected reply '" + ans + "'";
    }
    if (out.status == SolveStatus::Sat && !req.local_decls.empty()) {
      // Values of the frame-local symbols make recorded fixtures verifiable.
      std::ostringstream q;
      q << "(get-value (";
      for (size_t i = 0; i < req.local_decls.size(); ++i) {
        if (i) q << ' ';
        q << req.local_decls[i].name;
      }
      q << "))";
      impl_->send(q.str());
      std::string reply = impl_->read_sexpr_text();
      SExpr tree = read_one_sexpr(reply);
      if (!tree.is_atom && tree.size() == req.local_decls.size()) {
        for (size_t i = 0; i < tree.size(); ++i) {
          if (tree[i].is_atom || tree[i].size() != 2) continue;
          const auto& d = req.local_decls[i];
          if (d.sort == Sort::Real)
            out.model.set(d.name, parse_smt2_value(tree[i][1]));
          else
            out.model.set(d.name, tree[i][1].is_atom && tree[i][1].atom == "true");
        }
      }
    }
    impl_->send("(pop 1)");
    for (const auto& name : impl_->frame_reals) impl_->declared_reals.erase(name);
    for (const auto& name : impl_->frame_bools) impl_->declared_bools.erase(name);
    for (UfFn fn : impl_->frame_ufs) impl_->declared_ufs.erase(fn);
    impl_->frame_reals.clear();
    impl_->frame_bools.clear();
    impl_->frame_ufs.clear();
    return out;
  } catch (const BackendError& e) {
    SolveOutcome out;
    out.status = std::string(e.what()) == "timeout" ? SolveStatus::Unknown : SolveStatus::Error;
    out.diagnostics = e.what();
    return out;
  }
}

const std::vector<std::string>& ProcessBackend::transcript() const { return impl_->transcript; }

}  // namespace translin
