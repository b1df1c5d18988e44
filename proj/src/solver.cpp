// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/solver.hpp"

#include <map>

#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"
#include "sccpe/smtlib.hpp"

namespace sccpe {

namespace {

struct Edge {
  std::size_t from;
  std::size_t to;
  Integer weight;
};

}  // namespace

bool dl_conjunct_sat(std::span<const DLAtom> atoms) {
  std::map<std::string, std::size_t> vertex;
  constexpr std::size_t zero = 0;
  auto id = [&](const std::string& name) {
    auto [it, inserted] = vertex.emplace(name, vertex.size() + 1);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(atoms.size());
  for (const DLAtom& a : atoms) {
    switch (a.kind) {
      case DLAtom::Kind::Diff:
        edges.push_back({id(a.y), id(a.x), a.k});
        break;
      case DLAtom::Kind::UpperBound:
        edges.push_back({zero, id(a.x), a.k});
        break;
      case DLAtom::Kind::LowerBound:
        edges.push_back({id(a.x), zero, -a.k});
        break;
    }
  }
  // Bellman-Ford from a virtual source connected to every vertex with weight 0.
  const std::size_t n = vertex.size() + 1;
  std::vector<Integer> dist(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      Integer candidate = dist[e.from] + e.weight;
      if (candidate < dist[e.to]) {
        dist[e.to] = std::move(candidate);
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

namespace {

struct Item {
  Formula f;
  bool positive;
};
using Branch = std::vector<Item>;

class Splitter {
 public:
  explicit Splitter(std::size_t limit) : budget_(limit) {}

  // `todo` holds items still to be decomposed; `open` holds disjunctive items
  // deferred until every conjunctive item has been absorbed into `acc`.
  bool sat(Branch todo, std::vector<std::vector<Branch>> open, Conjunct acc) {
    while (!todo.empty()) {
      Item it = std::move(todo.back());
      todo.pop_back();
      const Formula& f = it.f;
      const bool pos = it.positive;
      switch (f.op()) {
        case Op::True:
        case Op::False:
          if (f.is_true() != pos) return false;
          continue;
        case Op::Not:
          todo.push_back({f.formula_arg(0), !pos});
          continue;
        case Op::And:
        case Op::Or: {
          const auto args = f.formula_args();
          if ((f.op() == Op::And) == pos) {
            for (const Formula& x : args) todo.push_back({x, pos});
          } else {
            std::vector<Branch> alts;
            for (const Formula& x : args) alts.push_back({{x, pos}});
            open.push_back(std::move(alts));
          }
          continue;
        }
        case Op::Implies:
          if (pos) {
            open.push_back({{{f.formula_arg(0), false}}, {{f.formula_arg(1), true}}});
          } else {
            todo.push_back({f.formula_arg(0), true});
            todo.push_back({f.formula_arg(1), false});
          }
          continue;
        case Op::Xor:
        case Op::BoolNe:
        case Op::BoolEq: {
          const bool differ = (f.op() != Op::BoolEq) == pos;
          const Formula x = f.formula_arg(0);
          const Formula y = f.formula_arg(1);
          open.push_back({{{x, true}, {y, !differ}}, {{x, false}, {y, differ}}});
          continue;
        }
        case Op::BoolIte: {
          const Formula c = f.formula_arg(0);
          open.push_back({{{c, true}, {f.formula_arg(1), pos}}, {{c, false}, {f.formula_arg(2), pos}}});
          continue;
        }
        default:
          break;
      }
      // A literal: its DNF has at most two conjuncts.
      Dnf d = to_dnf(pos ? f : Formula::not_(f));
      if (d.empty()) return false;
      if (d.size() == 1) {
        if (!absorb(acc, d[0])) return false;
        continue;
      }
      for (Conjunct& alt : d) {
        Conjunct next = acc;
        if (absorb(next, alt) && split(todo, open, std::move(next))) return true;
      }
      return false;
    }
    if (open.empty()) return true;
    std::vector<Branch> alts = std::move(open.back());
    open.pop_back();
    for (Branch& alt : alts) {
      if (split(std::move(alt), open, acc)) return true;
    }
    return false;
  }

 private:
  bool split(Branch todo, const std::vector<std::vector<Branch>>& open, Conjunct acc) {
    if (budget_ == 0) throw DnfLimitExceeded("internal procedure exceeded its case-split budget");
    --budget_;
    return sat(std::move(todo), open, std::move(acc));
  }

  static bool absorb(Conjunct& acc, const Conjunct& more) {
    acc.atoms.insert(acc.atoms.end(), more.atoms.begin(), more.atoms.end());
    for (const BoolLit& b : more.bools) {
      for (const BoolLit& have : acc.bools) {
        if (have.name == b.name && have.positive != b.positive) return false;
      }
      acc.bools.push_back(b);
    }
    return more.atoms.empty() || dl_conjunct_sat(acc.atoms);
  }

  std::size_t budget_;
};

void require_fragment(const Formula& f) {
  if (is_comparison_op(f.op())) {
    for (std::size_t i = 0; i < 2; ++i) {
      const Op op = f.int_arg(i).op();
      if (op != Op::IntVar && op != Op::IntLit) {
        throw FragmentUnsupported("arithmetic is outside the difference-logic fragment: " + to_string(f));
      }
    }
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) require_fragment(f.formula_arg(i));
}

}  // namespace

bool internal_sat(const Formula& c, std::size_t branch_limit) {
  // Sort clashes and non-fragment terms are reported before any search.
  (void)free_vars(c);
  require_fragment(c);
  Splitter splitter(branch_limit);
  return splitter.sat({{c, true}}, {}, Conjunct{});
}

Solver::Solver(SolverConfig config) : config_(std::move(config)) {
  if (config_.timeout_ms < 1) throw Error("solver timeout must be at least 1 ms");
  if (config_.backend == Backend::External && config_.external_command.empty()) {
    throw Error("external backend selected without a solver command");
  }
}

SatResult Solver::decide(const Formula& c) {
  if (config_.backend == Backend::Internal) {
    try {
      return internal_sat(c, config_.branch_limit) ? SatResult::sat() : SatResult::unsat();
    } catch (const FragmentUnsupported&) {
      if (config_.external_command.empty()) throw;
    }
  }
  return run_smtlib2(config_.external_command, to_smtlib2_script(c), config_.timeout_ms);
}

SatResult Solver::check_sat(const Formula& c) {
  if (c.is_true()) return SatResult::sat();
  if (c.is_false()) return SatResult::unsat();
  std::string key = to_string(c);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  SatResult r = decide(c);
  cache_.emplace(std::move(key), r);
  return r;
}

bool Solver::check_unsat(const Formula& c) {
  const SatResult r = check_sat(c);
  if (r.is_unknown()) {
    if (config_.unknown_policy == UnknownPolicy::AssumeUnsat) return true;
    throw SolverInconclusive("solver returned unknown (" + r.reason() + ") for " + to_string(c));
  }
  return r.is_unsat();
}

bool Solver::entails(const Formula& c, const Formula& d) { return check_unsat(conjoin(c, negate(d))); }

SatResult check_sat(const Formula& c, const SolverConfig& config) {
  Solver s(config);
  return s.check_sat(c);
}

bool check_unsat(const Formula& c, const SolverConfig& config) {
  Solver s(config);
  return s.check_unsat(c);
}

bool entails(const Formula& c, const Formula& d, const SolverConfig& config) {
  Solver s(config);
  return s.entails(c, d);
}

}  // namespace sccpe
