// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_DNF_HPP
#define SCCPE_DNF_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "sccpe/formula.hpp"

namespace sccpe {

/// Closed integer difference constraint.
///   UpperBound: x <= k
///   LowerBound: x >= k
///   Diff:       x - y <= k
struct DLAtom {
  enum class Kind : std::uint8_t { UpperBound, LowerBound, Diff };

  Kind kind = Kind::UpperBound;
  std::string x;
  std::string y;  // only for Diff
  Integer k;

  static DLAtom upper(std::string x, Integer k) { return {Kind::UpperBound, std::move(x), {}, std::move(k)}; }
  static DLAtom lower(std::string x, Integer k) { return {Kind::LowerBound, std::move(x), {}, std::move(k)}; }
  static DLAtom diff(std::string x, std::string y, Integer k) {
    return {Kind::Diff, std::move(x), std::move(y), std::move(k)};
  }

  friend std::strong_ordering operator<=>(const DLAtom& a, const DLAtom& b);
  friend bool operator==(const DLAtom& a, const DLAtom& b) { return (a <=> b) == 0; }
};

struct BoolLit {
  std::string name;
  bool positive = true;

  friend bool operator==(const BoolLit&, const BoolLit&) = default;
  friend auto operator<=>(const BoolLit&, const BoolLit&) = default;
};

/// One disjunct: a conjunction of literals, kept sorted and duplicate-free.
struct Conjunct {
  std::vector<DLAtom> atoms;
  std::vector<BoolLit> bools;

  friend bool operator==(const Conjunct&, const Conjunct&) = default;
};

/// Disjunction of conjuncts. Empty means false; an empty conjunct means true.
using Dnf = std::vector<Conjunct>;

inline constexpr std::size_t kDefaultDnfLimit = 4096;

/// Converts a fragment formula (boolean structure over boolean variables and
/// var/literal comparisons) to tightened difference-logic DNF. Throws
/// FragmentUnsupported outside the fragment and DnfLimitExceeded when more than
/// `limit` conjuncts would be produced.
Dnf to_dnf(const Formula& c, std::size_t limit = kDefaultDnfLimit);

/// Formula re-expansion of a DNF, for semantic comparison.
Formula dnf_to_formula(const Dnf& dnf);
Formula atom_to_formula(const DLAtom& atom);

}  // namespace sccpe

#endif  // SCCPE_DNF_HPP
