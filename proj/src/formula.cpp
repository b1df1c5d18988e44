// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/formula.hpp"

#include <algorithm>
#include <map>

#include "sccpe/error.hpp"

namespace sccpe {

const char* sort_name(Sort sort) { return sort == Sort::Bool ? "Bool" : "Int"; }

bool is_boolean_op(Op op) { return op <= Op::BoolIte; }

bool is_comparison_op(Op op) { return op >= Op::Lt && op <= Op::IntNe; }

namespace {

NodePtr make(Op op, std::vector<NodePtr> args = {}, std::string name = {}, Integer value = 0) {
  return std::make_shared<const TermNode>(TermNode{op, std::move(name), std::move(value), std::move(args)});
}

const NodePtr& true_node() {
  static const NodePtr node = make(Op::True);
  return node;
}

const NodePtr& false_node() {
  static const NodePtr node = make(Op::False);
  return node;
}

}  // namespace

std::strong_ordering compare_nodes(const TermNode& a, const TermNode& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = a.op <=> b.op; c != 0) return c;
  const std::size_t n = std::min(a.args.size(), b.args.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_nodes(*a.args[i], *b.args[i]); c != 0) return c;
  }
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  if (auto c = a.name.compare(b.name); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.value < b.value) return std::strong_ordering::less;
  if (b.value < a.value) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// IntExpr

IntExpr IntExpr::lit(Integer value) { return IntExpr(make(Op::IntLit, {}, {}, std::move(value))); }
IntExpr IntExpr::var(std::string name) { return IntExpr(make(Op::IntVar, {}, std::move(name))); }
IntExpr IntExpr::neg(IntExpr e) { return IntExpr(make(Op::Neg, {e.node_})); }
IntExpr IntExpr::add(IntExpr a, IntExpr b) { return IntExpr(make(Op::Add, {a.node_, b.node_})); }
IntExpr IntExpr::sub(IntExpr a, IntExpr b) { return IntExpr(make(Op::Sub, {a.node_, b.node_})); }
IntExpr IntExpr::mul(IntExpr a, IntExpr b) { return IntExpr(make(Op::Mul, {a.node_, b.node_})); }
IntExpr IntExpr::div(IntExpr a, IntExpr b) { return IntExpr(make(Op::Div, {a.node_, b.node_})); }
IntExpr IntExpr::mod(IntExpr a, IntExpr b) { return IntExpr(make(Op::Mod, {a.node_, b.node_})); }
IntExpr IntExpr::ite(Formula cond, IntExpr then_e, IntExpr else_e) {
  return IntExpr(make(Op::IntIte, {cond.node(), then_e.node_, else_e.node_}));
}

IntExpr IntExpr::from_node(NodePtr node) {
  if (!node || is_boolean_op(node->op)) throw MalformedFormula("expected an integer-valued term");
  return IntExpr(std::move(node));
}

IntExpr IntExpr::int_arg(std::size_t i) const { return IntExpr::from_node(node_->args.at(i)); }
Formula IntExpr::formula_arg(std::size_t i) const { return Formula::from_node(node_->args.at(i)); }

// ---------------------------------------------------------------------------
// Formula

Formula::Formula() : node_(true_node()) {}

Formula Formula::truth() { return Formula(true_node()); }
Formula Formula::falsity() { return Formula(false_node()); }
Formula Formula::constant(bool value) { return value ? truth() : falsity(); }
Formula Formula::var(std::string name) { return Formula(make(Op::BoolVar, {}, std::move(name))); }
Formula Formula::not_(Formula f) { return Formula(make(Op::Not, {f.node_})); }

Formula Formula::and_(std::vector<Formula> conjuncts) {
  if (conjuncts.size() < 2) throw MalformedFormula("'and' needs at least two operands");
  std::vector<NodePtr> args;
  args.reserve(conjuncts.size());
  for (auto& c : conjuncts) args.push_back(c.node_);
  return Formula(make(Op::And, std::move(args)));
}

Formula Formula::or_(std::vector<Formula> disjuncts) {
  if (disjuncts.size() < 2) throw MalformedFormula("'or' needs at least two operands");
  std::vector<NodePtr> args;
  args.reserve(disjuncts.size());
  for (auto& d : disjuncts) args.push_back(d.node_);
  return Formula(make(Op::Or, std::move(args)));
}

Formula Formula::xor_(Formula a, Formula b) { return Formula(make(Op::Xor, {a.node_, b.node_})); }
Formula Formula::implies(Formula a, Formula b) { return Formula(make(Op::Implies, {a.node_, b.node_})); }
Formula Formula::bool_eq(Formula a, Formula b) { return Formula(make(Op::BoolEq, {a.node_, b.node_})); }
Formula Formula::bool_ne(Formula a, Formula b) { return Formula(make(Op::BoolNe, {a.node_, b.node_})); }

Formula Formula::compare(Op op, IntExpr a, IntExpr b) {
  if (!is_comparison_op(op)) throw MalformedFormula("not a comparison operator");
  return Formula(make(op, {a.node(), b.node()}));
}

Formula Formula::ite(Formula cond, Formula then_f, Formula else_f) {
  return Formula(make(Op::BoolIte, {cond.node_, then_f.node_, else_f.node_}));
}

Formula Formula::from_node(NodePtr node) {
  if (!node || !is_boolean_op(node->op)) throw MalformedFormula("expected a boolean-valued term");
  return Formula(std::move(node));
}

Formula Formula::formula_arg(std::size_t i) const { return Formula::from_node(node_->args.at(i)); }
IntExpr Formula::int_arg(std::size_t i) const { return IntExpr::from_node(node_->args.at(i)); }

std::vector<Formula> Formula::formula_args() const {
  std::vector<Formula> out;
  out.reserve(node_->args.size());
  for (const auto& a : node_->args) out.push_back(Formula::from_node(a));
  return out;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) { return compare_nodes(*a.node(), *b.node()); }
bool operator==(const Formula& a, const Formula& b) { return compare_nodes(*a.node(), *b.node()) == 0; }
std::strong_ordering operator<=>(const IntExpr& a, const IntExpr& b) { return compare_nodes(*a.node(), *b.node()); }
bool operator==(const IntExpr& a, const IntExpr& b) { return compare_nodes(*a.node(), *b.node()) == 0; }

// ---------------------------------------------------------------------------
// Identities and canonical form

Formula conjoin(const Formula& c, const Formula& d) {
  if (c.is_false() || d.is_false()) return Formula::falsity();
  if (d.is_true()) return c;
  if (c.is_true()) return d;
  return Formula::and_({c, d});
}

Formula negate(const Formula& c) {
  if (c.is_true()) return Formula::falsity();
  if (c.is_false()) return Formula::truth();
  return Formula::not_(c);
}

namespace {

NodePtr canonical_node(const NodePtr& node);

NodePtr canonical_and(const TermNode& node) {
  std::vector<NodePtr> conjuncts;
  for (const auto& arg : node.args) {
    NodePtr c = canonical_node(arg);
    if (c->op == Op::False) return false_node();
    if (c->op == Op::True) continue;
    if (c->op == Op::And) {
      conjuncts.insert(conjuncts.end(), c->args.begin(), c->args.end());
    } else {
      conjuncts.push_back(std::move(c));
    }
  }
  auto less = [](const NodePtr& a, const NodePtr& b) { return compare_nodes(*a, *b) < 0; };
  auto same = [](const NodePtr& a, const NodePtr& b) { return compare_nodes(*a, *b) == 0; };
  std::sort(conjuncts.begin(), conjuncts.end(), less);
  conjuncts.erase(std::unique(conjuncts.begin(), conjuncts.end(), same), conjuncts.end());
  if (conjuncts.empty()) return true_node();
  if (conjuncts.size() == 1) return conjuncts.front();
  return make(Op::And, std::move(conjuncts));
}

NodePtr canonical_or(const TermNode& node) {
  std::vector<NodePtr> disjuncts;
  for (const auto& arg : node.args) {
    NodePtr d = canonical_node(arg);
    if (d->op == Op::True) return true_node();
    if (d->op == Op::False) continue;
    disjuncts.push_back(std::move(d));
  }
  if (disjuncts.empty()) return false_node();
  if (disjuncts.size() == 1) return disjuncts.front();
  return make(Op::Or, std::move(disjuncts));
}

NodePtr canonical_node(const NodePtr& node) {
  switch (node->op) {
    case Op::And:
      return canonical_and(*node);
    case Op::Or:
      return canonical_or(*node);
    case Op::Not: {
      NodePtr inner = canonical_node(node->args[0]);
      if (inner->op == Op::True) return false_node();
      if (inner->op == Op::False) return true_node();
      if (inner == node->args[0]) return node;
      return make(Op::Not, {std::move(inner)});
    }
    default:
      break;
  }
  if (node->args.empty()) return node;
  std::vector<NodePtr> args;
  args.reserve(node->args.size());
  bool changed = false;
  for (const auto& a : node->args) {
    args.push_back(canonical_node(a));
    changed = changed || args.back() != a;
  }
  if (!changed) return node;
  return make(node->op, std::move(args), node->name, node->value);
}

void collect_vars(const TermNode& node, std::map<std::string, Sort>& seen) {
  if (node.op == Op::BoolVar || node.op == Op::IntVar) {
    const Sort sort = node.op == Op::BoolVar ? Sort::Bool : Sort::Int;
    auto [it, inserted] = seen.emplace(node.name, sort);
    if (!inserted && it->second != sort) {
      throw MalformedFormula("variable " + node.name + " is used both as Bool and as Int");
    }
    return;
  }
  for (const auto& a : node.args) collect_vars(*a, seen);
}

std::set<VarName> vars_of(const TermNode& node) {
  std::map<std::string, Sort> seen;
  collect_vars(node, seen);
  std::set<VarName> out;
  for (auto& [name, sort] : seen) out.insert(VarName{name, sort});
  return out;
}

}  // namespace

Formula canonicalize(const Formula& c) { return Formula::from_node(canonical_node(c.node())); }

std::set<VarName> free_vars(const Formula& c) { return vars_of(*c.node()); }
std::set<VarName> free_vars(const IntExpr& e) { return vars_of(*e.node()); }

}  // namespace sccpe
