// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"
#include "sccpe/lang.hpp"

namespace sccpe::lang {

namespace {

const char* surface_op(Op op) {
  switch (op) {
    case Op::Gt: return ">";
    case Op::Lt: return "<";
    case Op::Ge: return ">=";
    case Op::Le: return "<=";
    case Op::IntEq:
    case Op::BoolEq: return "=";
    case Op::IntNe:
    case Op::BoolNe: return "=/=";
    default: return nullptr;
  }
}

[[noreturn]] void outside(const Formula& f) {
  throw Error("constraint outside the surface syntax: " + to_display_string(f));
}

std::string atom(const Formula& f) {
  switch (f.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::BoolVar: return f.name();
    case Op::BoolEq:
    case Op::BoolNe: {
      const Formula a = f.formula_arg(0);
      const Formula b = f.formula_arg(1);
      if (a.op() != Op::BoolVar || b.op() != Op::BoolVar) outside(f);
      return a.name() + ' ' + surface_op(f.op()) + ' ' + b.name();
    }
    default:
      break;
  }
  if (!is_comparison_op(f.op())) outside(f);
  const IntExpr a = f.int_arg(0);
  const IntExpr b = f.int_arg(1);
  if (a.op() != Op::IntVar) outside(f);
  std::string rhs;
  if (b.op() == Op::IntVar) {
    rhs = b.name();
  } else if (b.op() == Op::IntLit && b.value() >= 0) {
    rhs = b.value().str();
  } else {
    outside(f);
  }
  return a.name() + ' ' + surface_op(f.op()) + ' ' + rhs;
}

void print(const Process& p, std::ostringstream& out) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      throw Error("the nil process has no surface syntax");
    case Process::Kind::Tell:
      out << "tell(" << print_constraint(p.constraint()) << ')';
      return;
    case Process::Kind::Ask:
      // The body extends to the right, so it never needs parentheses.
      out << "ask " << print_constraint(p.constraint()) << " -> ";
      print(p.body(), out);
      return;
    case Process::Kind::Par: {
      const auto ops = p.operands();
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i > 0) out << " || ";
        const bool wrap =
            i + 1 < ops.size() && (ops[i].kind() == Process::Kind::Par || ops[i].kind() == Process::Kind::Ask);
        if (wrap) out << '(';
        print(ops[i], out);
        if (wrap) out << ')';
      }
      return;
    }
    case Process::Kind::Space:
      out << '[';
      print(p.body(), out);
      out << "]_" << p.index();
      return;
    case Process::Kind::Extr:
      out << "x(";
      print(p.body(), out);
      out << ")_" << p.index();
      return;
    case Process::Kind::Rec:
      out << "r(" << p.index() << ", ";
      print(p.body(), out);
      out << ')';
      return;
    case Process::Kind::Var:
      out << "v(" << p.index() << ')';
      return;
  }
}

}  // namespace

std::string print_constraint(const Formula& f) {
  if (f.op() != Op::And) return atom(f);
  std::string out;
  for (const Formula& c : f.formula_args()) {
    if (!out.empty()) out += " and ";
    out += atom(c);
  }
  return out;
}

std::string print_process(const Process& p) {
  std::ostringstream out;
  print(p, out);
  return out.str();
}

std::string print_program(const ProgramAst& ast) {
  std::ostringstream out;
  for (const VarDecl& d : ast.var_decls) {
    out << "var ";
    for (std::size_t i = 0; i < d.names.size(); ++i) out << (i ? ", " : "") << d.names[i];
    out << (d.sort == Sort::Int ? " Int" : " Bool") << '\n';
  }
  out << "begin\n";
  for (const Line& line : ast.lines) {
    if (const auto* a = std::get_if<AgentDecl>(&line.item)) {
      for (Natural n : a->location) out << n << " . ";
      out << "root ; " << print_constraint(a->constraint);
    } else {
      out << print_process(std::get<ProcessLine>(line.item).program);
    }
    out << " .\n";
  }
  out << "end\n";
  return out.str();
}

bool structurally_equal(const ProgramAst& a, const ProgramAst& b) {
  if (a.var_decls.size() != b.var_decls.size() || a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.var_decls.size(); ++i) {
    if (a.var_decls[i].names != b.var_decls[i].names || a.var_decls[i].sort != b.var_decls[i].sort) return false;
  }
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    const auto& x = a.lines[i].item;
    const auto& y = b.lines[i].item;
    if (x.index() != y.index()) return false;
    if (const auto* ax = std::get_if<AgentDecl>(&x)) {
      const auto& ay = std::get<AgentDecl>(y);
      if (ax->location != ay.location || !(ax->constraint == ay.constraint)) return false;
    } else if (!(std::get<ProcessLine>(x).program == std::get<ProcessLine>(y).program)) {
      return false;
    }
  }
  return true;
}

}  // namespace sccpe::lang
