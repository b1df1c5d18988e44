// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_FORMULA_HPP
#define SCCPE_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sccpe {

using Integer = boost::multiprecision::cpp_int;

enum class Sort : std::uint8_t { Bool, Int };

const char* sort_name(Sort sort);

struct VarName {
  std::string name;
  Sort sort = Sort::Int;

  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName&, const VarName&) = default;
};

/// Constructor tags of the constraint term language. The declaration order is
/// the first key of the structural term order.
enum class Op : std::uint8_t {
  // Boolean-valued.
  True,
  False,
  BoolVar,
  Not,
  And,
  Or,
  Xor,
  Implies,
  BoolEq,
  BoolNe,
  Lt,
  Le,
  Gt,
  Ge,
  IntEq,
  IntNe,
  BoolIte,
  // Integer-valued.
  IntLit,
  IntVar,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  IntIte,
};

bool is_boolean_op(Op op);
bool is_comparison_op(Op op);

struct TermNode;
using NodePtr = std::shared_ptr<const TermNode>;

/// Immutable node shared between formulas and integer expressions. Variables
/// carry their name, literals their value; everything else only children.
struct TermNode {
  Op op;
  std::string name;
  Integer value;
  std::vector<NodePtr> args;
};

/// Structural total order: tag, then children, then names, then literal value.
std::strong_ordering compare_nodes(const TermNode& a, const TermNode& b);

class Formula;

/// Integer-sorted term: literals, variables, arithmetic, conditional choice.
class IntExpr {
 public:
  static IntExpr lit(Integer value);
  static IntExpr var(std::string name);
  static IntExpr neg(IntExpr e);
  static IntExpr add(IntExpr a, IntExpr b);
  static IntExpr sub(IntExpr a, IntExpr b);
  static IntExpr mul(IntExpr a, IntExpr b);
  static IntExpr div(IntExpr a, IntExpr b);
  static IntExpr mod(IntExpr a, IntExpr b);
  static IntExpr ite(Formula cond, IntExpr then_e, IntExpr else_e);

  /// Wraps an existing node; throws MalformedFormula if it is not integer-valued.
  static IntExpr from_node(NodePtr node);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Integer& value() const { return node_->value; }
  std::size_t arity() const { return node_->args.size(); }
  IntExpr int_arg(std::size_t i) const;
  Formula formula_arg(std::size_t i) const;
  const NodePtr& node() const { return node_; }

 private:
  explicit IntExpr(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

/// Boolean-sorted constraint formula; the value of a store.
class Formula {
 public:
  /// The constant true.
  Formula();

  static Formula truth();
  static Formula falsity();
  static Formula constant(bool value);
  static Formula var(std::string name);
  static Formula not_(Formula f);
  /// Literal n-ary `and`, no simplification. See `conjoin` for the identities.
  static Formula and_(std::vector<Formula> conjuncts);
  static Formula or_(std::vector<Formula> disjuncts);
  static Formula xor_(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula bool_eq(Formula a, Formula b);
  static Formula bool_ne(Formula a, Formula b);
  static Formula compare(Op op, IntExpr a, IntExpr b);
  static Formula lt(IntExpr a, IntExpr b) { return compare(Op::Lt, std::move(a), std::move(b)); }
  static Formula le(IntExpr a, IntExpr b) { return compare(Op::Le, std::move(a), std::move(b)); }
  static Formula gt(IntExpr a, IntExpr b) { return compare(Op::Gt, std::move(a), std::move(b)); }
  static Formula ge(IntExpr a, IntExpr b) { return compare(Op::Ge, std::move(a), std::move(b)); }
  static Formula eq(IntExpr a, IntExpr b) { return compare(Op::IntEq, std::move(a), std::move(b)); }
  static Formula ne(IntExpr a, IntExpr b) { return compare(Op::IntNe, std::move(a), std::move(b)); }
  static Formula ite(Formula cond, Formula then_f, Formula else_f);

  /// Wraps an existing node; throws MalformedFormula if it is not boolean-valued.
  static Formula from_node(NodePtr node);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->args.size(); }
  Formula formula_arg(std::size_t i) const;
  IntExpr int_arg(std::size_t i) const;
  std::vector<Formula> formula_args() const;
  const NodePtr& node() const { return node_; }

  bool is_true() const { return node_->op == Op::True; }
  bool is_false() const { return node_->op == Op::False; }

 private:
  explicit Formula(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

std::strong_ordering operator<=>(const Formula& a, const Formula& b);
bool operator==(const Formula& a, const Formula& b);
std::strong_ordering operator<=>(const IntExpr& a, const IntExpr& b);
bool operator==(const IntExpr& a, const IntExpr& b);

/// Conjunction with the store-merge identities applied at the top only:
/// c and true = c, true and c = c, anything with false = false.
Formula conjoin(const Formula& c, const Formula& d);

/// Negation folding only the two boolean constants.
Formula negate(const Formula& c);

/// Syntactic canonical form used for state identity: `and` chains flattened,
/// `true` conjuncts dropped, `false` absorbing, duplicates removed, conjuncts
/// sorted by the term order. The same constant identities are applied to `or`
/// and `not`. Idempotent.
Formula canonicalize(const Formula& c);

/// Every variable with its sort. Throws MalformedFormula when one name is used
/// with two sorts.
std::set<VarName> free_vars(const Formula& c);
std::set<VarName> free_vars(const IntExpr& e);

}  // namespace sccpe

#endif  // SCCPE_FORMULA_HPP
