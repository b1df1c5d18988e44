// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"
#include "sccpe/json_io.hpp"
#include "sccpe/lang.hpp"
#include "sccpe/render.hpp"
#include "sccpe/search.hpp"
#include "sccpe/step.hpp"

namespace sccpe::cli {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string solver;
  int timeout_ms = 5000;
  std::string unknown_as = "error";
  std::string format = "text";
  std::string file;
  std::vector<std::string> query;
  std::string mode = "any";
  std::size_t max_depth = 64;
  std::size_t max_solutions = 0;  // 0: unlimited
  std::vector<std::string> entails;
};

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.timeout_ms = o.timeout_ms;
  cfg.unknown_policy = o.unknown_as == "paper" ? UnknownPolicy::AssumeUnsat : UnknownPolicy::Error;
  std::string choice = o.solver;
  if (choice.empty()) {
    const char* env = std::getenv("SCCPE_SOLVER");
    choice = env ? env : "internal";
  }
  if (choice == "internal") return cfg;
  cfg.backend = Backend::External;
  if (choice == "external") {
    cfg.external_command = "z3 -in";
  } else if (choice.starts_with("external:") && choice.size() > 9) {
    cfg.external_command = choice.substr(9);
  } else {
    throw Usage("--solver must be 'internal', 'external' or 'external:CMD', got '" + choice + "'");
  }
  return cfg;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Usage("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

struct Loaded {
  lang::ProgramAst ast;
  SysState initial;
};

Loaded load(const std::string& path, std::istream& in, std::ostream& err) {
  const std::string text = read_input(path, in);
  const std::string label = path == "-" ? "<stdin>" : path;
  lang::ParseResult parsed = lang::parse(text);
  std::vector<lang::Diagnostic> diags = parsed.diagnostics;
  if (parsed.ast) {
    auto more = lang::validate(*parsed.ast);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  for (const auto& d : diags) err << lang::format_diagnostic(d, label) << '\n';
  if (!parsed.ast || lang::has_errors(diags)) throw Usage("");
  return Loaded{*parsed.ast, lang::elaborate(*parsed.ast)};
}

SortEnv env_of(const lang::ProgramAst& ast) {
  SortEnv env;
  for (const auto& d : ast.var_decls) {
    for (const auto& n : d.names) env.emplace(n, d.sort);
  }
  return env;
}

json witness_json(const Witness& w) {
  return json{{"aid", aid_to_json(w.aid)},
              {"aid_text", w.aid.to_string()},
              {"store", formula_to_json(w.store)},
              {"store_text", to_display_string(w.store)}};
}

int cmd_run(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Loaded prog = load(o.file, in, err);
  const RunResult r = run(prog.initial, solver_config(o), o.max_depth);
  if (r.bound_hit) err << "warning: depth bound " << o.max_depth << " reached; exploration is incomplete\n";
  if (o.format == "json") {
    json terminals = json::array();
    for (const SysState& s : r.terminals) terminals.push_back(state_to_json_value(s));
    json doc{{"command", "run"},
             {"terminals", std::move(terminals)},
             {"states", r.states_explored},
             {"bound_hit", r.bound_hit}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < r.terminals.size(); ++i) {
    out << "Final state " << i + 1 << ":\n" << render_tree(r.terminals[i]);
  }
  out << "states: " << r.states_explored << "  final states: " << r.terminals.size() << '\n';
  return kOk;
}

int cmd_search(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.query.empty()) throw Usage("search requires --query inconsistent|entails FORMULA|equiv");
  std::string file = o.file;
  std::vector<std::string> q = o.query;
  // `--query inconsistent FILE` swallows the file into the query option.
  if (q.size() == 2 && q[0] != "entails" && file.empty()) {
    file = q[1];
    q.pop_back();
  }
  if (file.empty()) throw Usage("search requires an input file ('-' for stdin)");
  Options with_file = o;
  with_file.file = file;
  const Loaded prog = load(file, in, err);

  Query query;
  if (q[0] == "inconsistent" && q.size() == 1) {
    query = InconsistentStore{};
  } else if (q[0] == "equiv" && q.size() == 1) {
    query = StoresEquivalent{};
  } else if (q[0] == "entails" && q.size() == 2) {
    const SortEnv env = env_of(prog.ast);
    query = StoreEntails{read_formula(q[1], &env)};
  } else {
    throw Usage("--query must be 'inconsistent', 'equiv' or 'entails FORMULA'");
  }

  SearchOptions so;
  so.mode = o.mode == "final" ? SearchMode::TerminalOnly : SearchMode::AnyReachable;
  so.max_depth = o.max_depth;
  if (o.max_solutions > 0) so.max_solutions = o.max_solutions;
  const SearchOutcome r = search(prog.initial, query, so, solver_config(with_file));
  if (r.truncated) err << "warning: search stopped by a bound before exhausting the state space\n";

  if (o.format == "json") {
    json solutions = json::array();
    for (std::size_t i = 0; i < r.matches.size(); ++i) {
      const Match& m = r.matches[i];
      json ws = json::array();
      for (const Witness& w : m.witnesses) ws.push_back(witness_json(w));
      solutions.push_back({{"solution", i + 1},
                           {"state_index", m.state_index},
                           {"depth", m.depth},
                           {"witnesses", std::move(ws)},
                           {"state", state_to_json_value(m.state)}});
    }
    json doc{{"command", "search"},
             {"solutions", std::move(solutions)},
             {"states", r.states_explored},
             {"depth_reached", r.depth_reached},
             {"truncated", r.truncated}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < r.matches.size(); ++i) {
    const Match& m = r.matches[i];
    out << "Solution " << i + 1 << " (state " << m.state_index << ")\n";
    for (std::size_t k = 0; k < m.witnesses.size(); ++k) {
      const std::string suffix = m.witnesses.size() > 1 ? std::to_string(k) : "";
      out << "A" << suffix << " --> " << m.witnesses[k].aid.to_string() << '\n';
      out << "S" << suffix << " --> " << to_display_string(m.witnesses[k].store) << '\n';
    }
    out << '\n';
  }
  if (r.matches.empty()) out << "No solution.\n";
  out << "states: " << r.states_explored << "  solutions: " << r.matches.size() << '\n';
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.entails.size() != 2) throw Usage("check requires --entails C1 C2");
  SortEnv env;
  const std::string text = read_input(o.file, in);
  const bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
  // A blank input declares nothing; sorts are then inferred from the formulas.
  if (!blank) {
    std::istringstream again(text);
    env = env_of(load("-", again, err).ast);
  }
  const Formula c1 = read_formula(o.entails[0], blank ? nullptr : &env);
  const Formula c2 = read_formula(o.entails[1], blank ? nullptr : &env);
  const bool result = entails(c1, c2, solver_config(o));
  if (o.format == "json") {
    json doc{{"command", "check"},
             {"premise", to_display_string(c1)},
             {"conclusion", to_display_string(c2)},
             {"entails", result}};
    out << doc.dump(2) << '\n';
  } else {
    out << (result ? "true" : "false") << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Interpreter and reachability analyzer for spatial constraint systems with extrusion", "sccpe"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--solver", o.solver, "internal | external | external:CMD (default: $SCCPE_SOLVER or internal)");
  app.add_option("--timeout", o.timeout_ms, "per-query solver timeout in ms")->check(CLI::PositiveNumber);
  app.add_option("--unknown-as", o.unknown_as, "treatment of an unknown verdict")
      ->check(CLI::IsMember({"error", "paper"}));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  CLI::App* run_cmd = app.add_subcommand("run", "run a program to its final states");
  run_cmd->fallthrough();
  run_cmd->add_option("file", o.file, "program file, '-' for stdin")->required();
  run_cmd->add_option("--max-depth", o.max_depth, "transition bound");

  CLI::App* search_cmd = app.add_subcommand("search", "breadth-first search for states matching a query");
  search_cmd->fallthrough();
  search_cmd->add_option("file", o.file, "program file, '-' for stdin");
  search_cmd->add_option("--query", o.query, "inconsistent | entails FORMULA | equiv")->expected(1, 2)->required();
  search_cmd->add_option("--mode", o.mode, "test every state or only final ones")
      ->check(CLI::IsMember({"any", "final"}));
  search_cmd->add_option("--max-depth", o.max_depth, "transition bound");
  search_cmd->add_option("--max-solutions", o.max_solutions, "stop after N solutions (0: unlimited)");

  CLI::App* check_cmd = app.add_subcommand("check", "decide one entailment");
  check_cmd->fallthrough();
  check_cmd->add_option("file", o.file, "program supplying declarations, '-' for stdin")->required();
  check_cmd->add_option("--entails", o.entails, "premise and conclusion")->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(run_cmd)) return cmd_run(o, in, out, err);
    if (app.got_subcommand(search_cmd)) return cmd_search(o, in, out, err);
    return cmd_check(o, in, out, err);
  } catch (const Usage& e) {
    if (*e.what()) err << "sccpe: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "sccpe: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedFormula& e) {
    err << "sccpe: " << e.what() << '\n';
    return kUsage;
  } catch (const SolverInconclusive& e) {
    err << "sccpe: inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const FragmentUnsupported& e) {
    err << "sccpe: inconclusive: " << e.what() << " (try --solver external)\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "sccpe: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace sccpe::cli
