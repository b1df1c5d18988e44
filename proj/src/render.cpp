// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/render.hpp"

#include <map>
#include <sstream>

#include "sccpe/formula_io.hpp"

namespace sccpe {

namespace {

void print(const Process& p, std::ostringstream& out) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      out << '0';
      return;
    case Process::Kind::Tell:
      out << "tell(" << to_display_string(p.constraint()) << ')';
      return;
    case Process::Kind::Ask:
      out << "ask " << to_display_string(p.constraint()) << " -> ";
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

struct TreeNode {
  std::string store = "true";
  std::vector<std::string> processes;
  std::map<Natural, TreeNode> children;
};

TreeNode& node_at(TreeNode& root, const AgentId& aid) {
  TreeNode* n = &root;
  const auto& path = aid.path();
  for (auto it = path.rbegin(); it != path.rend(); ++it) n = &n->children[*it];
  return *n;
}

void emit(const TreeNode& n, const std::string& label, std::size_t depth, std::ostringstream& out) {
  const std::string indent(2 * depth, ' ');
  out << indent << label << ": " << n.store << '\n';
  for (const std::string& p : n.processes) out << indent << "  | " << p << '\n';
  for (const auto& [index, child] : n.children) emit(child, std::to_string(index), depth + 1, out);
}

}  // namespace

std::string to_display_string(const Process& p) {
  std::ostringstream out;
  print(p, out);
  return out.str();
}

std::string render_tree(const SysState& s) {
  TreeNode root;
  for (const Obj& o : s.objects()) {
    if (const auto* st = std::get_if<StoreObj>(&o)) {
      node_at(root, st->aid).store = to_display_string(st->constraint);
    } else {
      const auto& p = std::get<ProcObj>(o);
      node_at(root, p.aid).processes.push_back(to_display_string(p.program));
    }
  }
  std::ostringstream out;
  emit(root, "root", 0, out);
  return out.str();
}

}  // namespace sccpe
