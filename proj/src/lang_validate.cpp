// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <set>

#include "sccpe/error.hpp"
#include "sccpe/lang.hpp"

namespace sccpe::lang {

namespace {

// How a recursion variable occurrence is shielded inside its binder's body.
enum class Guard : std::uint8_t { None, TrueOnly, Ask };

class Checker {
 public:
  explicit Checker(const ProgramAst& ast) {
    for (const VarDecl& d : ast.var_decls) {
      for (const std::string& n : d.names) declared_.emplace(n, d.sort);
    }
  }

  void formula(const Formula& f, SourcePos pos) {
    std::set<VarName> vars;
    try {
      vars = free_vars(f);
    } catch (const MalformedFormula& e) {
      error(pos, e.what());
      return;
    }
    for (const VarName& v : vars) {
      auto it = declared_.find(v.name);
      if (it == declared_.end()) {
        error(pos, "identifier " + v.name + " is not declared");
      } else if (it->second != v.sort) {
        error(pos, "identifier " + v.name + " is declared " + sort_name(it->second) + " but used as " +
                       sort_name(v.sort));
      }
    }
  }

  void process(const Process& p, SourcePos pos) {
    std::map<Natural, Guard> scope;
    walk(p, scope, pos);
  }

  std::vector<Diagnostic> take() { return std::move(out_); }

 private:
  void error(SourcePos pos, std::string message) {
    out_.push_back({Diagnostic::Severity::Error, pos, std::move(message)});
  }
  void warning(SourcePos pos, std::string message) {
    out_.push_back({Diagnostic::Severity::Warning, pos, std::move(message)});
  }

  void walk(const Process& p, std::map<Natural, Guard> scope, SourcePos pos) {
    switch (p.kind()) {
      case Process::Kind::Nil:
        return;
      case Process::Kind::Tell:
        formula(p.constraint(), pos);
        return;
      case Process::Kind::Ask: {
        formula(p.constraint(), pos);
        const Guard g = p.constraint().is_true() ? Guard::TrueOnly : Guard::Ask;
        for (auto& [n, state] : scope) state = std::max(state, g);
        walk(p.body(), std::move(scope), pos);
        return;
      }
      case Process::Kind::Par:
        for (const Process& op : p.operands()) walk(op, scope, pos);
        return;
      case Process::Kind::Space:
      case Process::Kind::Extr:
        walk(p.body(), std::move(scope), pos);
        return;
      case Process::Kind::Rec:
        scope[p.index()] = Guard::None;
        walk(p.body(), std::move(scope), pos);
        return;
      case Process::Kind::Var: {
        const Natural n = p.index();
        auto it = scope.find(n);
        const std::string v = "v(" + std::to_string(n) + ")";
        const std::string r = "r(" + std::to_string(n) + ", ...)";
        if (it == scope.end()) {
          error(pos, "process variable " + v + " is not bound by an enclosing " + r);
        } else if (it->second == Guard::None) {
          warning(pos, "unguarded recursion: " + v + " is not under an ask inside " + r);
        } else if (it->second == Guard::TrueOnly) {
          warning(pos, "ask(true) -> P is unguarded: " + v + " is only under ask true inside " + r);
        }
        return;
      }
    }
  }

  std::map<std::string, Sort, std::less<>> declared_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const ProgramAst& ast) {
  Checker checker(ast);
  for (const Line& line : ast.lines) {
    if (const auto* a = std::get_if<AgentDecl>(&line.item)) {
      checker.formula(a->constraint, line.pos);
    } else {
      checker.process(std::get<ProcessLine>(line.item).program, line.pos);
    }
  }
  return checker.take();
}

SysState elaborate(const ProgramAst& ast) {
  std::vector<Obj> objects;
  std::set<AgentId> declared;
  std::set<AgentId> needed{AgentId::root()};
  for (const Line& line : ast.lines) {
    if (const auto* a = std::get_if<AgentDecl>(&line.item)) {
      AgentId aid(a->location);
      declared.insert(aid);
      for (AgentId up = aid; !up.is_root();) {
        up = up.parent();
        needed.insert(up);
      }
      objects.emplace_back(StoreObj{std::move(aid), a->constraint});
    } else {
      objects.emplace_back(ProcObj{AgentId::root(), std::get<ProcessLine>(line.item).program});
    }
  }
  for (const AgentId& aid : needed) {
    if (!declared.contains(aid)) objects.emplace_back(StoreObj{aid, Formula::truth()});
  }
  return normalize(SysState(std::move(objects)));
}

}  // namespace sccpe::lang
