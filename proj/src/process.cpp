// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/process.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"

namespace sccpe {

struct Process::Node {
  Kind kind = Kind::Nil;
  Natural index = 0;
  Formula constraint;
  std::vector<Process> children;
};

Process::Process() {
  static const std::shared_ptr<const Node> nil = std::make_shared<const Node>();
  node_ = nil;
}

Process Process::tell(Formula c) {
  return Process(std::make_shared<const Node>(Node{Kind::Tell, 0, std::move(c), {}}));
}

Process Process::ask(Formula guard, Process body) {
  return Process(std::make_shared<const Node>(Node{Kind::Ask, 0, std::move(guard), {std::move(body)}}));
}

Process Process::par(Process a, Process b) { return par(std::vector<Process>{std::move(a), std::move(b)}); }

Process Process::par(std::vector<Process> operands) {
  if (operands.size() < 2) throw Error("parallel composition needs at least two operands");
  return Process(std::make_shared<const Node>(Node{Kind::Par, 0, Formula(), std::move(operands)}));
}

Process Process::space(Natural agent, Process body) {
  return Process(std::make_shared<const Node>(Node{Kind::Space, agent, Formula(), {std::move(body)}}));
}

Process Process::rec(Natural var, Process body) {
  return Process(std::make_shared<const Node>(Node{Kind::Rec, var, Formula(), {std::move(body)}}));
}

Process Process::extr(Natural agent, Process body) {
  return Process(std::make_shared<const Node>(Node{Kind::Extr, agent, Formula(), {std::move(body)}}));
}

Process Process::var(Natural index) {
  return Process(std::make_shared<const Node>(Node{Kind::Var, index, Formula(), {}}));
}

Process::Kind Process::kind() const { return node_->kind; }
const Formula& Process::constraint() const { return node_->constraint; }
const Process& Process::body() const { return node_->children.at(0); }
std::span<const Process> Process::operands() const { return node_->children; }
Natural Process::index() const { return node_->index; }

std::strong_ordering operator<=>(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->index <=> b.node_->index; c != 0) return c;
  if (a.node_->kind == Process::Kind::Tell || a.node_->kind == Process::Kind::Ask) {
    if (auto c = a.node_->constraint <=> b.node_->constraint; c != 0) return c;
  }
  return std::lexicographical_compare_three_way(a.node_->children.begin(), a.node_->children.end(),
                                                b.node_->children.begin(), b.node_->children.end());
}

bool operator==(const Process& a, const Process& b) { return (a <=> b) == 0; }

std::vector<Process> par_operands(const Process& p) {
  if (p.kind() != Process::Kind::Par) return {p};
  std::vector<Process> out;
  for (const Process& op : p.operands()) {
    auto inner = par_operands(op);
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

Process canonicalize(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Nil:
    case Process::Kind::Var:
      return p;
    case Process::Kind::Tell:
      return Process::tell(canonicalize(p.constraint()));
    case Process::Kind::Ask:
      return Process::ask(canonicalize(p.constraint()), canonicalize(p.body()));
    case Process::Kind::Space:
      return Process::space(p.index(), canonicalize(p.body()));
    case Process::Kind::Rec:
      return Process::rec(p.index(), canonicalize(p.body()));
    case Process::Kind::Extr:
      return Process::extr(p.index(), canonicalize(p.body()));
    case Process::Kind::Par: {
      std::vector<Process> ops;
      for (const Process& op : par_operands(p)) ops.push_back(canonicalize(op));
      // Canonical operands are never Par themselves, so one sort suffices.
      std::sort(ops.begin(), ops.end());
      return Process::par(std::move(ops));
    }
  }
  return p;
}

Process replace(const Process& p, Natural n, const Process& q) {
  switch (p.kind()) {
    case Process::Kind::Nil:
    case Process::Kind::Tell:
    case Process::Kind::Rec:
      return p;
    case Process::Kind::Ask:
      return Process::ask(p.constraint(), replace(p.body(), n, q));
    case Process::Kind::Par: {
      std::vector<Process> ops;
      for (const Process& op : p.operands()) ops.push_back(replace(op, n, q));
      return Process::par(std::move(ops));
    }
    case Process::Kind::Space:
      return Process::space(p.index(), replace(p.body(), n, q));
    case Process::Kind::Extr:
      return Process::extr(p.index(), replace(p.body(), n, q));
    case Process::Kind::Var:
      return p.index() == n ? q : p;
  }
  return p;
}

namespace {

void print(const Process& p, std::ostringstream& out) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      out << '0';
      return;
    case Process::Kind::Tell:
      out << "tell(" << to_string(p.constraint()) << ')';
      return;
    case Process::Kind::Ask:
      out << "ask " << to_string(p.constraint()) << " -> ";
      if (p.body().kind() == Process::Kind::Par) {
        out << '(';
        print(p.body(), out);
        out << ')';
      } else {
        print(p.body(), out);
      }
      return;
    case Process::Kind::Par: {
      bool first = true;
      for (const Process& op : p.operands()) {
        if (!first) out << " || ";
        first = false;
        const bool wrap = op.kind() == Process::Kind::Par || op.kind() == Process::Kind::Ask;
        if (wrap) out << '(';
        print(op, out);
        if (wrap) out << ')';
      }
      return;
    }
    case Process::Kind::Space:
      out << "< " << p.index() << " >[";
      print(p.body(), out);
      out << ']';
      return;
    case Process::Kind::Rec:
      out << "rec(" << p.index() << ", ";
      print(p.body(), out);
      out << ')';
      return;
    case Process::Kind::Extr:
      out << "xtr(" << p.index() << ", ";
      print(p.body(), out);
      out << ')';
      return;
    case Process::Kind::Var:
      out << "v(" << p.index() << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Process& p) {
  std::ostringstream out;
  print(p, out);
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Process& p) { return os << to_string(p); }

}  // namespace sccpe
