// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/state.hpp"

#include <algorithm>
#include <sstream>

#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"

namespace sccpe {

AgentId AgentId::child(Natural n) const {
  std::vector<Natural> p;
  p.reserve(path_.size() + 1);
  p.push_back(n);
  p.insert(p.end(), path_.begin(), path_.end());
  return AgentId(std::move(p));
}

AgentId AgentId::parent() const {
  if (path_.empty()) throw Error("root has no parent space");
  return AgentId(std::vector<Natural>(path_.begin() + 1, path_.end()));
}

std::string AgentId::to_string() const {
  std::string out;
  for (Natural n : path_) out += std::to_string(n) + " . ";
  return out + "root";
}

bool is_prefix(const AgentId& a, const AgentId& b) {
  if (a.is_root()) return true;
  if (b.is_root()) return false;
  return a == b || is_prefix(a, b.parent());
}

const AgentId& aid_of(const Obj& o) {
  return std::visit([](const auto& x) -> const AgentId& { return x.aid; }, o);
}

std::strong_ordering compare_objects(const Obj& a, const Obj& b) {
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  if (auto c = aid_of(a) <=> aid_of(b); c != 0) return c;
  if (const auto* sa = std::get_if<StoreObj>(&a)) return sa->constraint <=> std::get<StoreObj>(b).constraint;
  return std::get<ProcObj>(a).program <=> std::get<ProcObj>(b).program;
}

std::optional<Formula> SysState::store(const AgentId& aid) const {
  for (const Obj& o : objects_) {
    if (const auto* s = std::get_if<StoreObj>(&o); s && s->aid == aid) return s->constraint;
  }
  return std::nullopt;
}

std::vector<StoreObj> SysState::stores() const {
  std::vector<StoreObj> out;
  for (const Obj& o : objects_) {
    if (const auto* s = std::get_if<StoreObj>(&o)) out.push_back(*s);
  }
  return out;
}

std::vector<ProcObj> SysState::processes() const {
  std::vector<ProcObj> out;
  for (const Obj& o : objects_) {
    if (const auto* p = std::get_if<ProcObj>(&o)) out.push_back(*p);
  }
  return out;
}

bool exists_store(std::span<const Obj> objects, const AgentId& aid) {
  return std::any_of(objects.begin(), objects.end(), [&](const Obj& o) {
    const auto* s = std::get_if<StoreObj>(&o);
    return s && s->aid == aid;
  });
}

SysState normalize(const SysState& s) {
  std::vector<StoreObj> stores;
  std::vector<Obj> out;
  for (const Obj& o : s.objects()) {
    if (const auto* p = std::get_if<ProcObj>(&o)) {
      if (p->program.kind() == Process::Kind::Nil) continue;
      out.emplace_back(ProcObj{p->aid, canonicalize(p->program)});
      continue;
    }
    const auto& st = std::get<StoreObj>(o);
    auto it = std::find_if(stores.begin(), stores.end(), [&](const StoreObj& x) { return x.aid == st.aid; });
    if (it == stores.end()) {
      stores.push_back(st);
    } else {
      it->constraint = conjoin(it->constraint, st.constraint);
    }
  }
  for (StoreObj& st : stores) out.emplace_back(StoreObj{std::move(st.aid), canonicalize(st.constraint)});
  std::sort(out.begin(), out.end(), [](const Obj& a, const Obj& b) { return compare_objects(a, b) < 0; });
  return SysState(std::move(out));
}

bool is_normalized(const SysState& s) {
  const auto& objs = s.objects();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i > 0 && compare_objects(objs[i - 1], objs[i]) > 0) return false;
    if (const auto* p = std::get_if<ProcObj>(&objs[i])) {
      if (p->program.kind() == Process::Kind::Nil) return false;
      if (!(canonicalize(p->program) == p->program)) return false;
    } else {
      const auto& st = std::get<StoreObj>(objs[i]);
      if (!(canonicalize(st.constraint) == st.constraint)) return false;
      if (i > 0) {
        const auto* prev = std::get_if<StoreObj>(&objs[i - 1]);
        if (prev && prev->aid == st.aid) return false;
      }
    }
  }
  return true;
}

std::string canonical_key(const SysState& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Obj& o : s.objects()) {
    if (!first) out << ' ';
    first = false;
    if (const auto* st = std::get_if<StoreObj>(&o)) {
      out << "[store, " << st->aid.to_string() << ", " << to_string(st->constraint) << ']';
    } else {
      const auto& p = std::get<ProcObj>(o);
      out << "[process, " << p.aid.to_string() << ", " << to_string(p.program) << ']';
    }
  }
  out << '}';
  return out.str();
}

}  // namespace sccpe
