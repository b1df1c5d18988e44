// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/json_io.hpp"

#include <array>
#include <utility>

#include "sccpe/error.hpp"

namespace sccpe {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Op, const char*>, 26> kTags{{
    {Op::True, "true"},       {Op::False, "false"},   {Op::BoolVar, "bool_var"}, {Op::Not, "not"},
    {Op::And, "and"},         {Op::Or, "or"},         {Op::Xor, "xor"},          {Op::Implies, "implies"},
    {Op::BoolEq, "bool_eq"},  {Op::BoolNe, "bool_ne"}, {Op::Lt, "lt"},           {Op::Le, "le"},
    {Op::Gt, "gt"},           {Op::Ge, "ge"},         {Op::IntEq, "int_eq"},     {Op::IntNe, "int_ne"},
    {Op::BoolIte, "bool_ite"}, {Op::IntLit, "int"},   {Op::IntVar, "int_var"},   {Op::Neg, "neg"},
    {Op::Add, "add"},         {Op::Sub, "sub"},       {Op::Mul, "mul"},          {Op::Div, "div"},
    {Op::Mod, "mod"},         {Op::IntIte, "int_ite"},
}};

const char* tag_of(Op op) {
  for (const auto& [o, tag] : kTags) {
    if (o == op) return tag;
  }
  return "?";
}

json node_to_json(const NodePtr& n) {
  json j{{"tag", tag_of(n->op)}};
  if (n->op == Op::BoolVar || n->op == Op::IntVar) j["name"] = n->name;
  if (n->op == Op::IntLit) j["value"] = n->value.str();
  if (!n->args.empty()) {
    json args = json::array();
    for (const NodePtr& a : n->args) args.push_back(node_to_json(a));
    j["args"] = std::move(args);
  }
  return j;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const std::string& path, const char* key) {
  const json& v = field(j, path, key);
  if (!v.is_string()) fail(path + '/' + key, "expected a string");
  return v.get<std::string>();
}

Natural natural_field(const json& j, const std::string& path, const char* key) {
  const json& v = field(j, path, key);
  if (!v.is_number_unsigned()) fail(path + '/' + key, "expected a non-negative integer");
  return v.get<Natural>();
}

struct TermReader {
  // Children are read with the sort their constructor demands; the builders
  // then check the arity-independent rules.
  Formula formula(const json& j, const std::string& path) {
    const std::string tag = string_field(j, path, "tag");
    const auto args = [&](std::size_t min, std::size_t max) -> const json& {
      const json& a = field(j, path, "args");
      if (!a.is_array() || a.size() < min || a.size() > max) {
        fail(path + "/args", "expected " + std::to_string(min) + (min == max ? "" : " or more") + " operands");
      }
      return a;
    };
    const auto sub = [&](std::size_t i) { return path + "/args/" + std::to_string(i); };
    try {
      if (tag == "true") return Formula::truth();
      if (tag == "false") return Formula::falsity();
      if (tag == "bool_var") return Formula::var(string_field(j, path, "name"));
      if (tag == "not") return Formula::not_(formula(args(1, 1)[0], sub(0)));
      if (tag == "and" || tag == "or") {
        const json& a = args(2, SIZE_MAX);
        std::vector<Formula> ops;
        for (std::size_t i = 0; i < a.size(); ++i) ops.push_back(formula(a[i], sub(i)));
        return tag == "and" ? Formula::and_(std::move(ops)) : Formula::or_(std::move(ops));
      }
      if (tag == "xor" || tag == "implies" || tag == "bool_eq" || tag == "bool_ne") {
        const json& a = args(2, 2);
        Formula x = formula(a[0], sub(0));
        Formula y = formula(a[1], sub(1));
        if (tag == "xor") return Formula::xor_(std::move(x), std::move(y));
        if (tag == "implies") return Formula::implies(std::move(x), std::move(y));
        if (tag == "bool_eq") return Formula::bool_eq(std::move(x), std::move(y));
        return Formula::bool_ne(std::move(x), std::move(y));
      }
      if (tag == "bool_ite") {
        const json& a = args(3, 3);
        return Formula::ite(formula(a[0], sub(0)), formula(a[1], sub(1)), formula(a[2], sub(2)));
      }
      for (Op op : {Op::Lt, Op::Le, Op::Gt, Op::Ge, Op::IntEq, Op::IntNe}) {
        if (tag == tag_of(op)) {
          const json& a = args(2, 2);
          return Formula::compare(op, int_expr(a[0], sub(0)), int_expr(a[1], sub(1)));
        }
      }
    } catch (const MalformedFormula& e) {
      fail(path, e.what());
    }
    fail(path + "/tag", "'" + tag + "' is not a boolean constructor");
  }

  IntExpr int_expr(const json& j, const std::string& path) {
    const std::string tag = string_field(j, path, "tag");
    const auto args = [&](std::size_t n) -> const json& {
      const json& a = field(j, path, "args");
      if (!a.is_array() || a.size() != n) fail(path + "/args", "expected " + std::to_string(n) + " operands");
      return a;
    };
    const auto sub = [&](std::size_t i) { return path + "/args/" + std::to_string(i); };
    if (tag == "int") {
      const json& v = field(j, path, "value");
      if (v.is_number_integer()) return IntExpr::lit(Integer(v.get<std::int64_t>()));
      if (!v.is_string()) fail(path + "/value", "expected a decimal string");
      try {
        return IntExpr::lit(Integer(v.get<std::string>()));
      } catch (const std::exception&) {
        fail(path + "/value", "not a decimal integer");
      }
    }
    if (tag == "int_var") return IntExpr::var(string_field(j, path, "name"));
    if (tag == "neg") return IntExpr::neg(int_expr(args(1)[0], sub(0)));
    if (tag == "int_ite") {
      const json& a = args(3);
      return IntExpr::ite(formula(a[0], sub(0)), int_expr(a[1], sub(1)), int_expr(a[2], sub(2)));
    }
    for (Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div, Op::Mod}) {
      if (tag == tag_of(op)) {
        const json& a = args(2);
        IntExpr x = int_expr(a[0], sub(0));
        IntExpr y = int_expr(a[1], sub(1));
        switch (op) {
          case Op::Add: return IntExpr::add(std::move(x), std::move(y));
          case Op::Sub: return IntExpr::sub(std::move(x), std::move(y));
          case Op::Mul: return IntExpr::mul(std::move(x), std::move(y));
          case Op::Div: return IntExpr::div(std::move(x), std::move(y));
          default: return IntExpr::mod(std::move(x), std::move(y));
        }
      }
    }
    fail(path + "/tag", "'" + tag + "' is not an integer constructor");
  }

  Process process(const json& j, const std::string& path) {
    const std::string tag = string_field(j, path, "tag");
    const auto body = [&] { return process(field(j, path, "body"), path + "/body"); };
    if (tag == "nil") return Process::nil();
    if (tag == "tell") return Process::tell(formula(field(j, path, "constraint"), path + "/constraint"));
    if (tag == "ask") {
      Formula guard = formula(field(j, path, "guard"), path + "/guard");
      return Process::ask(std::move(guard), body());
    }
    if (tag == "par") {
      const json& a = field(j, path, "args");
      if (!a.is_array() || a.size() < 2) fail(path + "/args", "expected 2 or more operands");
      std::vector<Process> ops;
      for (std::size_t i = 0; i < a.size(); ++i) ops.push_back(process(a[i], path + "/args/" + std::to_string(i)));
      return Process::par(std::move(ops));
    }
    if (tag == "space") return Process::space(natural_field(j, path, "agent"), body());
    if (tag == "extr") return Process::extr(natural_field(j, path, "agent"), body());
    if (tag == "rec") return Process::rec(natural_field(j, path, "var"), body());
    if (tag == "var") return Process::var(natural_field(j, path, "index"));
    fail(path + "/tag", "'" + tag + "' is not a process constructor");
  }
};

AgentId aid_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of agent indices");
  std::vector<Natural> p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned()) fail(path + '/' + std::to_string(i), "expected a non-negative integer");
    p.push_back(j[i].get<Natural>());
  }
  return AgentId(std::move(p));
}

}  // namespace

json formula_to_json(const Formula& f) { return node_to_json(f.node()); }
json int_expr_to_json(const IntExpr& e) { return node_to_json(e.node()); }

json process_to_json(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Nil: return json{{"tag", "nil"}};
    case Process::Kind::Tell: return json{{"tag", "tell"}, {"constraint", formula_to_json(p.constraint())}};
    case Process::Kind::Ask:
      return json{{"tag", "ask"}, {"guard", formula_to_json(p.constraint())}, {"body", process_to_json(p.body())}};
    case Process::Kind::Par: {
      json args = json::array();
      for (const Process& op : p.operands()) args.push_back(process_to_json(op));
      return json{{"tag", "par"}, {"args", std::move(args)}};
    }
    case Process::Kind::Space:
      return json{{"tag", "space"}, {"agent", p.index()}, {"body", process_to_json(p.body())}};
    case Process::Kind::Extr:
      return json{{"tag", "extr"}, {"agent", p.index()}, {"body", process_to_json(p.body())}};
    case Process::Kind::Rec:
      return json{{"tag", "rec"}, {"var", p.index()}, {"body", process_to_json(p.body())}};
    case Process::Kind::Var: return json{{"tag", "var"}, {"index", p.index()}};
  }
  return json{};
}

json aid_to_json(const AgentId& aid) { return json(aid.path()); }

json state_to_json_value(const SysState& s) {
  json objects = json::array();
  for (const Obj& o : s.objects()) {
    if (const auto* st = std::get_if<StoreObj>(&o)) {
      objects.push_back({{"kind", "store"}, {"aid", aid_to_json(st->aid)}, {"payload", formula_to_json(st->constraint)}});
    } else {
      const auto& p = std::get<ProcObj>(o);
      objects.push_back({{"kind", "process"}, {"aid", aid_to_json(p.aid)}, {"payload", process_to_json(p.program)}});
    }
  }
  return json{{"objects", std::move(objects)}};
}

std::string state_to_json(const SysState& s) { return state_to_json_value(s).dump(2); }

Formula formula_from_json(const json& j) { return TermReader{}.formula(j, ""); }
Process process_from_json(const json& j) { return TermReader{}.process(j, ""); }

SysState state_from_json_value(const json& j) {
  const json& objects = field(j, "", "objects");
  if (!objects.is_array()) fail("/objects", "expected an array");
  std::vector<Obj> out;
  TermReader reader;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string path = "/objects/" + std::to_string(i);
    const json& o = objects[i];
    const std::string kind = string_field(o, path, "kind");
    AgentId aid = aid_from_json(field(o, path, "aid"), path + "/aid");
    const json& payload = field(o, path, "payload");
    if (kind == "store") {
      out.emplace_back(StoreObj{std::move(aid), reader.formula(payload, path + "/payload")});
    } else if (kind == "process") {
      out.emplace_back(ProcObj{std::move(aid), reader.process(payload, path + "/payload")});
    } else {
      fail(path + "/kind", "expected \"store\" or \"process\"");
    }
  }
  return SysState(std::move(out));
}

SysState state_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("/: ") + e.what());
  }
  return state_from_json_value(j);
}

}  // namespace sccpe
