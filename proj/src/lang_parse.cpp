// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>
#include <map>

#include "sccpe/lang.hpp"

namespace sccpe::lang {

std::string format_diagnostic(const Diagnostic& d, std::string_view file) {
  std::string out(file);
  out += ':' + std::to_string(d.pos.line) + ':' + std::to_string(d.pos.column) + ": ";
  out += d.severity == Diagnostic::Severity::Error ? "error: " : "warning: ";
  return out + d.message;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics) {
    if (d.severity == Diagnostic::Severity::Error) return true;
  }
  return false;
}

namespace {

enum class Tok : std::uint8_t {
  Ident,    // [A-Z][A-Z0-9]*
  Number,   // [0-9]+
  Keyword,  // any other word
  Symbol,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

struct SyntaxError {
  SourcePos pos;
  std::string message;
};

bool is_ident(std::string_view w) {
  if (w.empty() || w[0] < 'A' || w[0] > 'Z') return false;
  for (char c : w) {
    if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))) return false;
  }
  return true;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  static constexpr std::string_view kSymbols[] = {"=/=", "||", "->", ">=", "<=", ".", ";", ",", "(",
                                                  ")",   "[",  "]",  "_",  ">",  "<", "="};
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      const Tok kind = is_ident(word) ? Tok::Ident : Tok::Keyword;
      advance(j - i);
      out.push_back({kind, std::move(word), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      advance(j - i);
      out.push_back({Tok::Number, std::move(digits), start});
      continue;
    }
    bool matched = false;
    for (std::string_view sym : kSymbols) {
      if (text.substr(i, sym.size()) == sym) {
        advance(sym.size());
        out.push_back({Tok::Symbol, std::string(sym), start});
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError{start, std::string("unexpected character '") + c + "'"};
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number " + t.text;
    case Tok::Ident: return "identifier " + t.text;
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ProgramAst program() {
    ProgramAst ast;
    while (is_keyword("var")) ast.var_decls.push_back(var_decl());
    expect_keyword("begin");
    while (!is_keyword("end")) {
      if (peek().kind == Tok::End) throw SyntaxError{peek().pos, "expected 'end' before end of input"};
      ast.lines.push_back(line());
    }
    if (ast.lines.empty()) throw SyntaxError{peek().pos, "body requires at least one line between 'begin' and 'end'"};
    next();
    if (peek().kind != Tok::End) throw SyntaxError{peek().pos, "unexpected " + describe(peek()) + " after 'end'"};
    return ast;
  }

  std::vector<Diagnostic> diagnostics;

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }
  bool is_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool is_keyword(std::string_view s) const { return peek().kind == Tok::Keyword && peek().text == s; }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) throw SyntaxError{peek().pos, "expected '" + std::string(s) + "', found " + describe(peek())};
    next();
  }
  void expect_keyword(std::string_view s) {
    if (!is_keyword(s)) throw SyntaxError{peek().pos, "expected '" + std::string(s) + "', found " + describe(peek())};
    next();
  }

  Natural natural() {
    if (peek().kind != Tok::Number) throw SyntaxError{peek().pos, "expected a natural number, found " + describe(peek())};
    const Token& t = next();
    Natural n = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) {
      throw SyntaxError{t.pos, "agent or variable index " + t.text + " is out of range"};
    }
    return n;
  }

  VarDecl var_decl() {
    VarDecl decl;
    decl.pos = peek().pos;
    next();
    std::vector<SourcePos> name_pos;
    for (;;) {
      if (peek().kind != Tok::Ident) throw SyntaxError{peek().pos, "expected an identifier, found " + describe(peek())};
      name_pos.push_back(peek().pos);
      decl.names.push_back(next().text);
      if (is_symbol(",")) {
        next();
        continue;
      }
      if (peek().kind == Tok::Ident) continue;
      break;
    }
    if (is_keyword("Int")) {
      decl.sort = Sort::Int;
    } else if (is_keyword("Bool")) {
      decl.sort = Sort::Bool;
    } else {
      throw SyntaxError{peek().pos, "expected 'Int' or 'Bool', found " + describe(peek())};
    }
    next();
    for (std::size_t k = 0; k < decl.names.size(); ++k) {
      auto [it, fresh] = declared_.try_emplace(decl.names[k], decl.sort);
      if (!fresh && it->second != decl.sort) {
        diagnostics.push_back({Diagnostic::Severity::Error, name_pos[k],
                               "variable " + decl.names[k] + " declared with conflicting sorts " +
                                   sort_name(it->second) + " and " + sort_name(decl.sort)});
      }
    }
    return decl;
  }

  Line line() {
    Line out;
    out.pos = peek().pos;
    if (peek().kind == Tok::Number || is_keyword("root")) {
      AgentDecl agent;
      while (peek().kind == Tok::Number) {
        agent.location.push_back(natural());
        expect_symbol(".");
      }
      expect_keyword("root");
      expect_symbol(";");
      agent.constraint = constraint();
      out.item = std::move(agent);
    } else {
      out.item = ProcessLine{process()};
    }
    expect_symbol(".");
    return out;
  }

  // The sort an identifier is read at: declared, else as first used.
  std::optional<Sort> sort_of(const std::string& name) const {
    if (auto it = declared_.find(name); it != declared_.end()) return it->second;
    if (auto it = provisional_.find(name); it != provisional_.end()) return it->second;
    return std::nullopt;
  }

  void use(const Token& id, Sort sort) {
    const auto known = sort_of(id.text);
    if (known && *known != sort) {
      throw SyntaxError{id.pos, "identifier " + id.text + " has sort " + sort_name(*known) + " but is used as " +
                                    sort_name(sort)};
    }
    if (!declared_.contains(id.text)) provisional_.emplace(id.text, sort);
  }

  Formula constraint() {
    std::vector<Formula> parts{atom()};
    while (is_keyword("and")) {
      next();
      parts.push_back(atom());
    }
    return parts.size() == 1 ? parts.front() : Formula::and_(std::move(parts));
  }

  Formula atom() {
    if (is_keyword("true")) {
      next();
      return Formula::truth();
    }
    if (is_keyword("false")) {
      next();
      return Formula::falsity();
    }
    if (peek().kind != Tok::Ident) throw SyntaxError{peek().pos, "expected a constraint, found " + describe(peek())};
    const Token lhs = next();
    static constexpr std::string_view kOps[] = {">", "<", "=", "=/=", ">=", "<="};
    std::string op;
    for (std::string_view o : kOps) {
      if (is_symbol(o)) op = o;
    }
    if (op.empty()) {
      if (sort_of(lhs.text) == Sort::Int) {
        throw SyntaxError{lhs.pos, "integer identifier " + lhs.text + " cannot stand alone as a constraint"};
      }
      use(lhs, Sort::Bool);
      return Formula::var(lhs.text);
    }
    next();
    const bool equality = op == "=" || op == "=/=";
    if (peek().kind == Tok::Number) {
      const Token rhs = next();
      use(lhs, Sort::Int);
      return Formula::compare(op_of(op), IntExpr::var(lhs.text), IntExpr::lit(Integer(rhs.text)));
    }
    if (peek().kind != Tok::Ident) {
      throw SyntaxError{peek().pos, "expected an identifier or number after '" + op + "', found " + describe(peek())};
    }
    const Token rhs = next();
    Sort sort = Sort::Int;
    if (equality && (sort_of(lhs.text) == Sort::Bool || sort_of(rhs.text) == Sort::Bool)) sort = Sort::Bool;
    use(lhs, sort);
    use(rhs, sort);
    if (sort == Sort::Bool) {
      return op == "=" ? Formula::bool_eq(Formula::var(lhs.text), Formula::var(rhs.text))
                       : Formula::bool_ne(Formula::var(lhs.text), Formula::var(rhs.text));
    }
    return Formula::compare(op_of(op), IntExpr::var(lhs.text), IntExpr::var(rhs.text));
  }

  static Op op_of(std::string_view op) {
    if (op == ">") return Op::Gt;
    if (op == "<") return Op::Lt;
    if (op == ">=") return Op::Ge;
    if (op == "<=") return Op::Le;
    if (op == "=") return Op::IntEq;
    return Op::IntNe;
  }

  Process process() {
    Process left = unary();
    if (!is_symbol("||")) return left;
    next();
    return Process::par(std::move(left), process());
  }

  Process unary() {
    const Token& t = peek();
    if (t.kind == Tok::Keyword && t.text == "tell") {
      next();
      expect_symbol("(");
      Formula c = constraint();
      expect_symbol(")");
      return Process::tell(std::move(c));
    }
    if (t.kind == Tok::Keyword && t.text == "ask") {
      next();
      Formula c = constraint();
      expect_symbol("->");
      return Process::ask(std::move(c), process());
    }
    if (t.kind == Tok::Keyword && t.text == "x") {
      next();
      expect_symbol("(");
      Process body = process();
      expect_symbol(")");
      expect_symbol("_");
      return Process::extr(natural(), std::move(body));
    }
    if (t.kind == Tok::Keyword && t.text == "v") {
      next();
      expect_symbol("(");
      const Natural n = natural();
      expect_symbol(")");
      return Process::var(n);
    }
    if (t.kind == Tok::Keyword && t.text == "r") {
      next();
      expect_symbol("(");
      const Natural n = natural();
      expect_symbol(",");
      Process body = process();
      expect_symbol(")");
      return Process::rec(n, std::move(body));
    }
    if (is_symbol("[")) {
      next();
      Process body = process();
      expect_symbol("]");
      expect_symbol("_");
      return Process::space(natural(), std::move(body));
    }
    if (is_symbol("(")) {
      next();
      Process inner = process();
      expect_symbol(")");
      return inner;
    }
    throw SyntaxError{t.pos, "expected a process, found " + describe(t)};
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::map<std::string, Sort, std::less<>> declared_;
  std::map<std::string, Sort, std::less<>> provisional_;
};

}  // namespace

ParseResult parse(std::string_view text) {
  ParseResult result;
  std::vector<Token> tokens;
  try {
    tokens = lex(text);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back({Diagnostic::Severity::Error, e.pos, e.message});
    return result;
  }
  Parser parser(std::move(tokens));
  try {
    ProgramAst ast = parser.program();
    result.diagnostics = std::move(parser.diagnostics);
    if (!has_errors(result.diagnostics)) result.ast = std::move(ast);
  } catch (const SyntaxError& e) {
    result.diagnostics = std::move(parser.diagnostics);
    result.diagnostics.push_back({Diagnostic::Severity::Error, e.pos, e.message});
  }
  return result;
}

}  // namespace sccpe::lang
