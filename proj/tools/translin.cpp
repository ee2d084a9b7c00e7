// SPDX-License-Identifier: Apache-2.0
//
// translin: satisfiability solver for quantifier-free real arithmetic with
// exp/sin (and rewritable relatives) over an external SMT(UFLRA) backend.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "translin/driver.hpp"
#include "translin/parser.hpp"
#include "translin/printer.hpp"

using namespace translin;

int main(int argc, char** argv) {
  CLI::App app{"incremental-linearization SMT solver for transcendental arithmetic"};

  std::string input_path;
  std::string backend_cmd;
  std::string dump_lemmas_path;
  std::string record_path;
  SolverConfig cfg;
  bool print_stats = false;

  app.add_option("input", input_path, "SMT-LIB2 input file")->required();
  app.add_option("--backend", backend_cmd,
                 "UFLRA solver command, or mock:<fixture.json> for replay");
  app.add_option("--timeout", cfg.wall_clock_seconds, "wall-clock budget in seconds");
  app.add_option("--max-iters", cfg.max_iterations, "iteration budget");
  app.add_option("--precision", cfg.initial_precision, "initial precision (eps = 10^-p)");
  app.add_option("--bump-period", cfg.bump_period, "iterations between precision bumps");
  app.add_option("--dump-lemmas", dump_lemmas_path, "write the lemma trace to this file");
  app.add_option("--record", record_path, "record the backend interaction as a mock fixture");
  app.add_flag("--stats", print_stats, "print solver statistics as key=value lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (cfg.initial_precision < 1 || cfg.bump_period < 1 || cfg.max_iterations < 1 ||
      cfg.wall_clock_seconds < 1) {
    std::cerr << "error: budgets and precision must be positive\n";
    return 1;
  }

  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open " << input_path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Problem problem;
  try {
    problem = parse(buf.str(), input_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::unique_ptr<Backend> backend;
  try {
    if (backend_cmd.rfind("mock:", 0) == 0) {
      backend = MockBackend::from_fixture_file(backend_cmd.substr(5));
    } else if (!backend_cmd.empty()) {
      BackendConfig bc;
      bc.command = backend_cmd;
      bc.timeout_seconds = cfg.wall_clock_seconds;
      backend = std::make_unique<ProcessBackend>(bc);
    } else {
      std::cerr << "error: --backend is required (a solver command or mock:<fixture>)\n";
      return 1;
    }
    if (!record_path.empty())
      backend = std::make_unique<RecordingBackend>(std::move(backend), record_path);
  } catch (const BackendError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  SolverResult res;
  try {
    res = solve(problem, cfg, *backend);
  } catch (const BackendError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!dump_lemmas_path.empty()) {
    std::ofstream out(dump_lemmas_path);
    if (!out) {
      std::cerr << "error: cannot write " << dump_lemmas_path << "\n";
      return 1;
    }
    for (const auto& lem : res.lemmas) out << to_smt2(lem.formula) << "\n";
  }

  switch (res.status) {
    case SolveResultStatus::Sat: {
      std::cout << "sat\n";
      if (problem.wants_model) {
        std::cout << "(model\n";
        for (const auto& [name, v] : res.model_reals)
          std::cout << "  (" << name << " " << to_smt2(v) << ")\n";
        for (const auto& [name, v] : res.model_bools)
          std::cout << "  (" << name << " " << (v ? "true" : "false") << ")\n";
        std::cout << ")\n";
        std::cout << "(enclosures\n";
        for (const auto& e : res.enclosures)
          std::cout << "  (" << e.app_key << " [" << e.lb << ", " << e.ub << "])\n";
        std::cout << ")\n";
      }
      break;
    }
    case SolveResultStatus::Unsat:
      std::cout << "unsat\n";
      break;
    case SolveResultStatus::Unknown:
      std::cout << "unknown\n";
      std::cout << "; reason=" << unknown_reason_name(res.reason) << "\n";
      if (!res.diagnostics.empty()) std::cout << "; diagnostics=" << res.diagnostics << "\n";
      break;
  }

  if (print_stats) {
    std::cout << "iterations=" << res.stats.iterations << "\n";
    std::cout << "final_precision=" << res.stats.final_precision << "\n";
    std::cout << "backend_checks=" << res.stats.backend_checks << "\n";
    std::cout << "universal_checks=" << res.stats.universal_checks << "\n";
    for (const auto& [kind, count] : res.stats.lemmas_by_kind)
      std::cout << "lemmas_" << kind << "=" << count << "\n";
  }

  return res.status == SolveResultStatus::Unknown ? 2 : 0;
}
