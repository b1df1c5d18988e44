// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_STATE_HPP
#define SCCPE_STATE_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sccpe/formula.hpp"
#include "sccpe/process.hpp"

namespace sccpe {

/// Qualified space name. The path is innermost first: `3 . 1 . root` is
/// {3, 1}; the empty path is `root`.
class AgentId {
 public:
  AgentId() = default;
  explicit AgentId(std::vector<Natural> path) : path_(std::move(path)) {}

  static AgentId root() { return AgentId(); }

  bool is_root() const { return path_.empty(); }
  /// `n . this`
  AgentId child(Natural n) const;
  /// Enclosing space; precondition: not root.
  AgentId parent() const;
  /// Agent index of the innermost component; precondition: not root.
  Natural innermost() const { return path_.front(); }
  std::size_t depth() const { return path_.size(); }
  const std::vector<Natural>& path() const { return path_; }

  /// `3 . 1 . root`
  std::string to_string() const;

  friend bool operator==(const AgentId&, const AgentId&) = default;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;

 private:
  std::vector<Natural> path_;
};

/// True iff `a` is `b` or an ancestor of `b`.
bool is_prefix(const AgentId& a, const AgentId& b);

struct StoreObj {
  AgentId aid;
  Formula constraint;

  friend bool operator==(const StoreObj&, const StoreObj&) = default;
};

struct ProcObj {
  AgentId aid;
  Process program;

  friend bool operator==(const ProcObj&, const ProcObj&) = default;
};

using Obj = std::variant<StoreObj, ProcObj>;

const AgentId& aid_of(const Obj& o);

/// Canonical object order: stores before processes, then aid, then payload.
std::strong_ordering compare_objects(const Obj& a, const Obj& b);

/// Multiset of store and process objects. Use `normalize` to reach the
/// canonical representative.
class SysState {
 public:
  SysState() = default;
  explicit SysState(std::vector<Obj> objects) : objects_(std::move(objects)) {}

  const std::vector<Obj>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }

  /// Store formula at `aid`, if a store object exists there. On an
  /// unnormalized state the first match is returned.
  std::optional<Formula> store(const AgentId& aid) const;
  std::vector<StoreObj> stores() const;
  std::vector<ProcObj> processes() const;

  friend bool operator==(const SysState&, const SysState&) = default;

 private:
  std::vector<Obj> objects_;
};

bool exists_store(std::span<const Obj> objects, const AgentId& aid);

/// Removes nil processes, merges stores sharing an aid, canonicalizes every
/// payload, and sorts the objects. Idempotent.
SysState normalize(const SysState& s);

/// True iff `s` has at most one store per aid, no nil process objects, and is
/// in canonical order with canonical payloads.
bool is_normalized(const SysState& s);

/// Text identifying a normalized state; equal keys iff equal states.
std::string canonical_key(const SysState& s);

}  // namespace sccpe

#endif  // SCCPE_STATE_HPP
