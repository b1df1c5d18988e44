// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/formula_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include "sccpe/error.hpp"

namespace sccpe {

namespace {

// ---------------------------------------------------------------------------
// Printing

bool is_connective(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Xor || op == Op::Implies || op == Op::BoolEq ||
         op == Op::BoolNe;
}

const char* comparison_token(Op op, bool display) {
  switch (op) {
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::IntEq: return display ? "=" : "===";
    case Op::IntNe: return display ? "=/=" : "=/==";
    case Op::BoolEq: return "===";
    case Op::BoolNe: return "=/==";
    default: return "?";
  }
}

const char* arith_token(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "div";
    case Op::Mod: return "mod";
    default: return "?";
  }
}

const char* connective_token(Op op) {
  switch (op) {
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Xor: return "xor";
    case Op::Implies: return "implies";
    default: return "?";
  }
}

class Printer {
 public:
  explicit Printer(bool display) : display_(display) {}

  void formula(const TermNode& n) {
    switch (n.op) {
      case Op::True: out_ << "true"; return;
      case Op::False: out_ << "false"; return;
      case Op::BoolVar:
        out_ << n.name;
        if (!display_) out_ << ":Boolean";
        return;
      case Op::Not:
        out_ << "not(";
        formula(*n.args[0]);
        out_ << ')';
        return;
      case Op::And:
      case Op::Or:
      case Op::Xor:
      case Op::Implies:
        for (std::size_t i = 0; i < n.args.size(); ++i) {
          if (i) out_ << ' ' << connective_token(n.op) << ' ';
          wrapped_formula(*n.args[i], is_connective(n.args[i]->op));
        }
        return;
      case Op::BoolEq:
      case Op::BoolNe: {
        auto needs = [](Op op) { return is_connective(op) || is_comparison_op(op); };
        wrapped_formula(*n.args[0], needs(n.args[0]->op));
        out_ << ' ' << comparison_token(n.op, display_) << ' ';
        wrapped_formula(*n.args[1], needs(n.args[1]->op));
        return;
      }
      case Op::BoolIte:
        ite(n);
        return;
      default:
        break;
    }
    if (is_comparison_op(n.op)) {
      integer(*n.args[0]);
      out_ << ' ' << comparison_token(n.op, display_) << ' ';
      integer(*n.args[1]);
      return;
    }
    throw MalformedFormula("integer term in boolean position");
  }

  void integer(const TermNode& n) {
    switch (n.op) {
      case Op::IntLit: out_ << n.value; return;
      case Op::IntVar:
        out_ << n.name;
        if (!display_) out_ << ":Integer";
        return;
      case Op::Neg:
        out_ << "(- ";
        integer(*n.args[0]);
        out_ << ')';
        return;
      case Op::Add:
      case Op::Sub:
      case Op::Mul:
      case Op::Div:
      case Op::Mod:
        out_ << '(';
        integer(*n.args[0]);
        out_ << ' ' << arith_token(n.op) << ' ';
        integer(*n.args[1]);
        out_ << ')';
        return;
      case Op::IntIte:
        ite(n);
        return;
      default:
        throw MalformedFormula("boolean term in integer position");
    }
  }

  std::string str() const { return out_.str(); }

 private:
  void wrapped_formula(const TermNode& n, bool wrap) {
    if (wrap) out_ << '(';
    formula(n);
    if (wrap) out_ << ')';
  }

  void ite(const TermNode& n) {
    out_ << '(';
    formula(*n.args[0]);
    out_ << " ? ";
    if (n.op == Op::BoolIte) {
      formula(*n.args[1]);
      out_ << " : ";
      formula(*n.args[2]);
    } else {
      integer(*n.args[1]);
      out_ << " : ";
      integer(*n.args[2]);
    }
    out_ << ')';
  }

  bool display_;
  std::ostringstream out_;
};

// ---------------------------------------------------------------------------
// Reading

enum class Tok { Ident, Int, Sym, Annot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  bool glued = false;  // no whitespace before this token
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto operand_end = [&]() {
    if (out.empty()) return false;
    const Token& t = out.back();
    static constexpr std::string_view connectives[] = {"and", "or", "xor", "implies", "not", "div", "mod"};
    if (t.kind == Tok::Ident && std::find(std::begin(connectives), std::end(connectives), t.text) != std::end(connectives)) {
      return false;
    }
    return t.kind == Tok::Ident || t.kind == Tok::Int || t.kind == Tok::Annot || (t.kind == Tok::Sym && t.text == ")");
  };
  while (i < s.size()) {
    const std::size_t start = i;
    const bool glued = i > 0 && !std::isspace(static_cast<unsigned char>(s[i - 1]));
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start, glued});
      continue;
    }
    const bool negative_literal = c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])) && !operand_end();
    if (std::isdigit(static_cast<unsigned char>(c)) || negative_literal) {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start, glued});
      continue;
    }
    if ((c == ':' || c == '.') && glued && operand_end()) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      const std::string_view word = s.substr(i + 1, j - i - 1);
      if (word == "Integer" || word == "Boolean") {
        out.push_back({Tok::Annot, std::string(word), start, glued});
        i = j;
        continue;
      }
    }
    static constexpr std::string_view symbols[] = {"=/==", "===", "=/=", "<=", ">=", "=", "<", ">", "+", "-",
                                                   "*",    "(",   ")",   "?",  ":",  ","};
    bool matched = false;
    for (std::string_view sym : symbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({Tok::Sym, std::string(sym), start, glued});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Untyped syntax tree; sorts are resolved after parsing.
struct UTerm {
  enum Kind { Const, Ident, Lit, Not, Neg, Nary, Binary, Ite } kind;
  std::string text;  // operator, identifier, or literal digits
  std::optional<Sort> annotation;
  std::vector<UTerm> args;
};

class Reader {
 public:
  Reader(std::string_view text, const SortEnv* env) : tokens_(lex(text)), env_(env) {}

  Formula read() {
    UTerm t = expr();
    if (peek().kind != Tok::End) fail("trailing input");
    return as_formula(t);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_word(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(peek().pos) +
                     (peek().kind == Tok::End ? " (end of input)" : " near '" + peek().text + "'"));
  }

  void expect_sym(std::string_view s) {
    if (!at_sym(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }

  UTerm expr() { return implies(); }

  UTerm implies() {
    UTerm lhs = or_();
    if (at_word("implies")) {
      ++pos_;
      UTerm rhs = implies();
      return UTerm{UTerm::Binary, "implies", {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  UTerm nary(std::string_view word, UTerm (Reader::*next)()) {
    UTerm first = (this->*next)();
    if (!at_word(word)) return first;
    UTerm out{UTerm::Nary, std::string(word), {}, {}};
    out.args.push_back(std::move(first));
    while (at_word(word)) {
      ++pos_;
      out.args.push_back((this->*next)());
    }
    return out;
  }

  UTerm or_() { return nary("or", &Reader::xor_); }

  UTerm xor_() {
    UTerm lhs = and_();
    while (at_word("xor")) {
      ++pos_;
      UTerm rhs = and_();
      lhs = UTerm{UTerm::Binary, "xor", {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  UTerm and_() { return nary("and", &Reader::equality); }

  UTerm equality() {
    UTerm lhs = comparison();
    for (std::string_view op : {"===", "=/==", "=", "=/="}) {
      if (at_sym(op)) {
        ++pos_;
        UTerm rhs = comparison();
        const std::string canonical = (op == "===" || op == "=") ? "===" : "=/==";
        return UTerm{UTerm::Binary, canonical, {}, {std::move(lhs), std::move(rhs)}};
      }
    }
    return lhs;
  }

  UTerm comparison() {
    UTerm lhs = sum();
    for (std::string_view op : {"<", "<=", ">", ">="}) {
      if (at_sym(op)) {
        ++pos_;
        UTerm rhs = sum();
        return UTerm{UTerm::Binary, std::string(op), {}, {std::move(lhs), std::move(rhs)}};
      }
    }
    return lhs;
  }

  UTerm sum() {
    UTerm lhs = product();
    while (at_sym("+") || at_sym("-")) {
      std::string op = take().text;
      UTerm rhs = product();
      lhs = UTerm{UTerm::Binary, op, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  UTerm product() {
    UTerm lhs = unary();
    while (at_sym("*") || at_word("div") || at_word("mod")) {
      std::string op = take().text;
      UTerm rhs = unary();
      lhs = UTerm{UTerm::Binary, op, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  UTerm unary() {
    if (at_sym("-")) {
      ++pos_;
      return UTerm{UTerm::Neg, "-", {}, {unary()}};
    }
    if (at_word("not")) {
      ++pos_;
      return UTerm{UTerm::Not, "not", {}, {unary()}};
    }
    return primary();
  }

  UTerm primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      ++pos_;
      UTerm lit{UTerm::Lit, t.text, {}, {}};
      skip_annotation();
      return lit;
    }
    if (t.kind == Tok::Ident) {
      static constexpr std::string_view reserved[] = {"and", "or", "xor", "implies", "not", "div", "mod"};
      for (auto r : reserved) {
        if (t.text == r) fail("unexpected keyword");
      }
      ++pos_;
      if (t.text == "true" || t.text == "false") {
        skip_annotation();
        return UTerm{UTerm::Const, t.text, {}, {}};
      }
      UTerm id{UTerm::Ident, t.text, {}, {}};
      if (peek().kind == Tok::Annot) id.annotation = take().text == "Integer" ? Sort::Int : Sort::Bool;
      return id;
    }
    if (at_sym("(")) {
      ++pos_;
      UTerm inner = expr();
      if (at_sym("?")) {
        ++pos_;
        UTerm then_t = expr();
        expect_sym(":");
        UTerm else_t = expr();
        expect_sym(")");
        return UTerm{UTerm::Ite, "?", {}, {std::move(inner), std::move(then_t), std::move(else_t)}};
      }
      expect_sym(")");
      skip_annotation();
      return inner;
    }
    fail("expected a term");
  }

  void skip_annotation() {
    if (peek().kind == Tok::Annot) ++pos_;
  }

  std::optional<Sort> declared(const UTerm& t) const {
    if (t.annotation) return t.annotation;
    if (env_) {
      if (auto it = env_->find(t.text); it != env_->end()) return it->second;
    }
    return std::nullopt;
  }

  std::optional<Sort> infer(const UTerm& t) const {
    switch (t.kind) {
      case UTerm::Const:
      case UTerm::Not:
      case UTerm::Nary:
        return Sort::Bool;
      case UTerm::Lit:
      case UTerm::Neg:
        return Sort::Int;
      case UTerm::Ident:
        return declared(t);
      case UTerm::Ite:
        if (auto s = infer(t.args[1])) return s;
        return infer(t.args[2]);
      case UTerm::Binary:
        if (t.text == "+" || t.text == "-" || t.text == "*" || t.text == "div" || t.text == "mod") return Sort::Int;
        return Sort::Bool;
    }
    return std::nullopt;
  }

  Sort ident_sort(const UTerm& t, Sort context) const {
    const std::optional<Sort> s = declared(t);
    if (s && *s != context) {
      throw ParseError("identifier " + t.text + " has sort " + sort_name(*s) + " but is used as " + sort_name(context));
    }
    return context;
  }

  Formula as_formula(const UTerm& t) const {
    switch (t.kind) {
      case UTerm::Const:
        return Formula::constant(t.text == "true");
      case UTerm::Ident:
        ident_sort(t, Sort::Bool);
        return Formula::var(t.text);
      case UTerm::Not:
        return Formula::not_(as_formula(t.args[0]));
      case UTerm::Nary: {
        std::vector<Formula> parts;
        for (const auto& a : t.args) parts.push_back(as_formula(a));
        return t.text == "and" ? Formula::and_(std::move(parts)) : Formula::or_(std::move(parts));
      }
      case UTerm::Ite:
        return Formula::ite(as_formula(t.args[0]), as_formula(t.args[1]), as_formula(t.args[2]));
      case UTerm::Binary: {
        const std::string& op = t.text;
        if (op == "implies") return Formula::implies(as_formula(t.args[0]), as_formula(t.args[1]));
        if (op == "xor") return Formula::xor_(as_formula(t.args[0]), as_formula(t.args[1]));
        if (op == "===" || op == "=/==") {
          const bool boolean = infer(t.args[0]) == Sort::Bool || infer(t.args[1]) == Sort::Bool;
          if (boolean) {
            Formula a = as_formula(t.args[0]);
            Formula b = as_formula(t.args[1]);
            return op == "===" ? Formula::bool_eq(a, b) : Formula::bool_ne(a, b);
          }
          return Formula::compare(op == "===" ? Op::IntEq : Op::IntNe, as_int(t.args[0]), as_int(t.args[1]));
        }
        Op cmp;
        if (op == "<") cmp = Op::Lt;
        else if (op == "<=") cmp = Op::Le;
        else if (op == ">") cmp = Op::Gt;
        else if (op == ">=") cmp = Op::Ge;
        else throw ParseError("integer expression '" + op + "' used as a formula");
        return Formula::compare(cmp, as_int(t.args[0]), as_int(t.args[1]));
      }
      case UTerm::Lit:
      case UTerm::Neg:
        break;
    }
    throw ParseError("integer expression used as a formula");
  }

  IntExpr as_int(const UTerm& t) const {
    switch (t.kind) {
      case UTerm::Lit:
        return IntExpr::lit(Integer(t.text));
      case UTerm::Ident:
        ident_sort(t, Sort::Int);
        return IntExpr::var(t.text);
      case UTerm::Neg:
        return IntExpr::neg(as_int(t.args[0]));
      case UTerm::Ite:
        return IntExpr::ite(as_formula(t.args[0]), as_int(t.args[1]), as_int(t.args[2]));
      case UTerm::Binary: {
        IntExpr a = as_int(t.args[0]);
        IntExpr b = as_int(t.args[1]);
        if (t.text == "+") return IntExpr::add(a, b);
        if (t.text == "-") return IntExpr::sub(a, b);
        if (t.text == "*") return IntExpr::mul(a, b);
        if (t.text == "div") return IntExpr::div(a, b);
        if (t.text == "mod") return IntExpr::mod(a, b);
        break;
      }
      default:
        break;
    }
    throw ParseError("formula used as an integer expression");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const SortEnv* env_;
};

}  // namespace

std::string to_string(const Formula& f) {
  Printer p(false);
  p.formula(*f.node());
  return p.str();
}

std::string to_string(const IntExpr& e) {
  Printer p(false);
  p.integer(*e.node());
  return p.str();
}

std::string to_display_string(const Formula& f) {
  Printer p(true);
  p.formula(*f.node());
  return p.str();
}

Formula read_formula(std::string_view text, const SortEnv* env) {
  Reader reader(text, env);
  return reader.read();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const IntExpr& e) { return os << to_string(e); }

}  // namespace sccpe
