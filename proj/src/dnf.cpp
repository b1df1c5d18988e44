// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/dnf.hpp"

#include <algorithm>

#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"

namespace sccpe {

std::strong_ordering operator<=>(const DLAtom& a, const DLAtom& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.x <=> b.x; c != 0) return c;
  if (auto c = a.y <=> b.y; c != 0) return c;
  if (a.k < b.k) return std::strong_ordering::less;
  if (b.k < a.k) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

void tidy(Conjunct& c) {
  std::sort(c.atoms.begin(), c.atoms.end());
  c.atoms.erase(std::unique(c.atoms.begin(), c.atoms.end()), c.atoms.end());
  std::sort(c.bools.begin(), c.bools.end());
  c.bools.erase(std::unique(c.bools.begin(), c.bools.end()), c.bools.end());
}

class DnfBuilder {
 public:
  explicit DnfBuilder(std::size_t limit) : limit_(limit) {}

  Dnf build(const Formula& f, bool positive) {
    switch (f.op()) {
      case Op::True:
        return positive ? top() : Dnf{};
      case Op::False:
        return positive ? Dnf{} : top();
      case Op::BoolVar:
        return {Conjunct{{}, {BoolLit{f.name(), positive}}}};
      case Op::Not:
        return build(f.formula_arg(0), !positive);
      case Op::And:
      case Op::Or: {
        // and under positive polarity (or under negative) multiplies out.
        const bool multiply = (f.op() == Op::And) == positive;
        Dnf acc = multiply ? top() : Dnf{};
        for (const Formula& part : f.formula_args()) {
          Dnf d = build(part, positive);
          acc = multiply ? product(acc, d) : sum(std::move(acc), std::move(d));
        }
        return acc;
      }
      case Op::Implies: {
        const Formula a = f.formula_arg(0);
        const Formula b = f.formula_arg(1);
        if (positive) return sum(build(a, false), build(b, true));
        return product(build(a, true), build(b, false));
      }
      case Op::Xor:
      case Op::BoolNe:
      case Op::BoolEq: {
        const Formula a = f.formula_arg(0);
        const Formula b = f.formula_arg(1);
        // a xor b = (a and not b) or (not a and b); its negation pairs equal polarities.
        const bool differ = (f.op() != Op::BoolEq) == positive;
        Dnf left = product(build(a, true), build(b, !differ));
        Dnf right = product(build(a, false), build(b, differ));
        return sum(std::move(left), std::move(right));
      }
      case Op::BoolIte: {
        const Formula c = f.formula_arg(0);
        // (c and t) or (not c and e), under either polarity of t and e.
        Dnf left = product(build(c, true), build(f.formula_arg(1), positive));
        Dnf right = product(build(c, false), build(f.formula_arg(2), positive));
        return sum(std::move(left), std::move(right));
      }
      default:
        break;
    }
    if (is_comparison_op(f.op())) return comparison(f, positive);
    throw FragmentUnsupported("not in the difference-logic fragment: " + to_string(f));
  }

 private:
  static Dnf top() { return {Conjunct{}}; }

  void check(std::size_t n) const {
    if (n > limit_) throw DnfLimitExceeded("DNF expansion exceeds " + std::to_string(limit_) + " conjuncts");
  }

  Dnf sum(Dnf a, Dnf b) const {
    check(a.size() + b.size());
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    return a;
  }

  Dnf product(const Dnf& a, const Dnf& b) const {
    check(a.size() * b.size());
    Dnf out;
    out.reserve(a.size() * b.size());
    for (const Conjunct& x : a) {
      for (const Conjunct& y : b) {
        Conjunct c = x;
        c.atoms.insert(c.atoms.end(), y.atoms.begin(), y.atoms.end());
        c.bools.insert(c.bools.end(), y.bools.begin(), y.bools.end());
        tidy(c);
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  static Op negated(Op op) {
    switch (op) {
      case Op::Lt: return Op::Ge;
      case Op::Le: return Op::Gt;
      case Op::Gt: return Op::Le;
      case Op::Ge: return Op::Lt;
      case Op::IntEq: return Op::IntNe;
      case Op::IntNe: return Op::IntEq;
      default: return op;
    }
  }

  // k op x  ==  x mirrored(op) k
  static Op mirrored(Op op) {
    switch (op) {
      case Op::Lt: return Op::Gt;
      case Op::Le: return Op::Ge;
      case Op::Gt: return Op::Lt;
      case Op::Ge: return Op::Le;
      default: return op;
    }
  }

  static Dnf single(DLAtom atom) { return {Conjunct{{std::move(atom)}, {}}}; }

  Dnf comparison(const Formula& f, bool positive) const {
    Op op = positive ? f.op() : negated(f.op());
    IntExpr lhs = f.int_arg(0);
    IntExpr rhs = f.int_arg(1);
    auto simple = [](const IntExpr& e) { return e.op() == Op::IntVar || e.op() == Op::IntLit; };
    if (!simple(lhs) || !simple(rhs)) {
      throw FragmentUnsupported("arithmetic is outside the difference-logic fragment: " + to_string(f));
    }
    if (lhs.op() == Op::IntLit && rhs.op() == Op::IntLit) {
      const Integer& a = lhs.value();
      const Integer& b = rhs.value();
      bool holds = false;
      switch (op) {
        case Op::Lt: holds = a < b; break;
        case Op::Le: holds = a <= b; break;
        case Op::Gt: holds = a > b; break;
        case Op::Ge: holds = a >= b; break;
        case Op::IntEq: holds = a == b; break;
        case Op::IntNe: holds = a != b; break;
        default: break;
      }
      return holds ? top() : Dnf{};
    }
    if (lhs.op() == Op::IntLit) {
      std::swap(lhs, rhs);
      op = mirrored(op);
    }
    const std::string& x = lhs.name();
    if (rhs.op() == Op::IntLit) {
      const Integer& k = rhs.value();
      switch (op) {
        case Op::Lt: return single(DLAtom::upper(x, k - 1));
        case Op::Le: return single(DLAtom::upper(x, k));
        case Op::Gt: return single(DLAtom::lower(x, k + 1));
        case Op::Ge: return single(DLAtom::lower(x, k));
        case Op::IntEq: {
          Conjunct c{{DLAtom::upper(x, k), DLAtom::lower(x, k)}, {}};
          tidy(c);
          return {c};
        }
        case Op::IntNe: return {Conjunct{{DLAtom::upper(x, k - 1)}, {}}, Conjunct{{DLAtom::lower(x, k + 1)}, {}}};
        default: break;
      }
    } else {
      const std::string& y = rhs.name();
      switch (op) {
        case Op::Lt: return single(DLAtom::diff(x, y, -1));
        case Op::Le: return single(DLAtom::diff(x, y, 0));
        case Op::Gt: return single(DLAtom::diff(y, x, -1));
        case Op::Ge: return single(DLAtom::diff(y, x, 0));
        case Op::IntEq: {
          Conjunct c{{DLAtom::diff(x, y, 0), DLAtom::diff(y, x, 0)}, {}};
          tidy(c);
          return {c};
        }
        case Op::IntNe: return {Conjunct{{DLAtom::diff(x, y, -1)}, {}}, Conjunct{{DLAtom::diff(y, x, -1)}, {}}};
        default: break;
      }
    }
    throw FragmentUnsupported("unexpected comparison");
  }

  std::size_t limit_;
};

}  // namespace

Dnf to_dnf(const Formula& c, std::size_t limit) {
  // Sort clashes are reported before any expansion.
  (void)free_vars(c);
  DnfBuilder builder(limit);
  return builder.build(c, true);
}

Formula atom_to_formula(const DLAtom& atom) {
  switch (atom.kind) {
    case DLAtom::Kind::UpperBound:
      return Formula::le(IntExpr::var(atom.x), IntExpr::lit(atom.k));
    case DLAtom::Kind::LowerBound:
      return Formula::ge(IntExpr::var(atom.x), IntExpr::lit(atom.k));
    case DLAtom::Kind::Diff:
      return Formula::le(IntExpr::sub(IntExpr::var(atom.x), IntExpr::var(atom.y)), IntExpr::lit(atom.k));
  }
  return Formula::truth();
}

Formula dnf_to_formula(const Dnf& dnf) {
  std::vector<Formula> disjuncts;
  for (const Conjunct& c : dnf) {
    std::vector<Formula> lits;
    for (const DLAtom& a : c.atoms) lits.push_back(atom_to_formula(a));
    for (const BoolLit& b : c.bools) {
      lits.push_back(b.positive ? Formula::var(b.name) : Formula::not_(Formula::var(b.name)));
    }
    if (lits.empty()) {
      disjuncts.push_back(Formula::truth());
    } else if (lits.size() == 1) {
      disjuncts.push_back(lits.front());
    } else {
      disjuncts.push_back(Formula::and_(std::move(lits)));
    }
  }
  if (disjuncts.empty()) return Formula::falsity();
  if (disjuncts.size() == 1) return disjuncts.front();
  return Formula::or_(std::move(disjuncts));
}

}  // namespace sccpe
