// Copyright 2026 The exmon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exmon/lang/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace exmon::lang {

namespace {

struct Token {
  enum class Kind { Ident, Int, Word, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> words = {"var",  "skip", "if",  "then", "else", "choose", "while",
                                              "do",   "true", "false", "and", "or",  "not",    "query"};
  return words;
}

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  static const char* const two_char[] = {":=", "..", "==", "!=", "<=", ">="};
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.text = src.substr(i, j - i);
      t.kind = keywords().count(t.text) ? Token::Kind::Word : Token::Kind::Ident;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.text = src.substr(i, j - i);
      t.kind = Token::Kind::Int;
      advance(j - i);
    } else {
      t.kind = Token::Kind::Sym;
      for (const char* two : two_char) {
        if (src.compare(i, 2, two) == 0) t.text = two;
      }
      if (t.text.empty()) {
        if (std::string(":;{}(),+-*/=<>[]").find(c) == std::string::npos) {
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

bool later(const ParseError& a, const ParseError& b) {
  return a.line() != b.line() ? a.line() > b.line() : a.col() > b.col();
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Decls decls) : toks_(std::move(tokens)), decls_(std::move(decls)) {
    for (std::size_t i = 0; i < decls_.size(); ++i) index_[decls_[i].name] = i;
  }

  ParsedFile file() {
    ParsedFile out;
    while (at_word("var")) declaration();
    out.program.body = statements();
    while (at_word("query")) {
      next();
      out.queries.push_back(query());
      if (at_sym(";")) next();
    }
    expect_end();
    out.program.decls = decls_;
    return out;
  }

  QueryPredicate query_only() {
    QueryPredicate q = query();
    expect_end();
    return q;
  }

  Valuation valuation_only() {
    Valuation values(decls_.size());
    std::vector<bool> seen(decls_.size(), false);
    while (true) {
      const Token name = expect_kind(Token::Kind::Ident, "a variable name");
      const std::size_t v = lookup(name);
      if (seen[v]) fail(name, "variable " + name.text + " assigned twice");
      expect_sym("=");
      const Token at = peek();
      const std::int64_t value = integer();
      if (!decls_[v].contains(value)) fail(at, out_of_range(value, v));
      values[v] = value;
      seen[v] = true;
      if (!at_sym(",")) break;
      next();
    }
    expect_end();
    for (std::size_t v = 0; v < decls_.size(); ++v) {
      if (!seen[v]) fail(peek(), "variable " + decls_[v].name + " is not assigned");
    }
    return values;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  bool at_word(const char* s) const { return peek().kind == Token::Kind::Word && peek().text == s; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }

  Token expect_sym(const char* s) {
    if (!at_sym(s)) fail(peek(), std::string("expected '") + s + "' but found " + describe(peek()));
    return next();
  }
  Token expect_word(const char* s) {
    if (!at_word(s)) fail(peek(), std::string("expected '") + s + "' but found " + describe(peek()));
    return next();
  }
  Token expect_kind(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + " but found " + describe(peek()));
    return next();
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected " + describe(peek()));
  }

  std::string out_of_range(std::int64_t value, std::size_t v) const {
    const auto& d = decls_[v];
    return "value " + std::to_string(value) + " outside the range " + std::to_string(d.lo) + ".." + std::to_string(d.hi) +
           " of " + d.name;
  }

  std::size_t lookup(const Token& name) const {
    auto it = index_.find(name.text);
    if (it == index_.end()) fail(name, "undeclared variable '" + name.text + "'");
    return it->second;
  }

  std::int64_t unsigned_literal(const Token& t, bool negative) const {
    std::string digits = negative ? "-" + t.text : t.text;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail(t, "integer literal " + digits + " out of range");
    return v;
  }

  std::int64_t integer() {
    const bool negative = at_sym("-");
    if (negative) next();
    return unsigned_literal(expect_kind(Token::Kind::Int, "an integer"), negative);
  }

  Rational rational() {
    const bool negative = at_sym("-");
    if (negative) next();
    const Token num = expect_kind(Token::Kind::Int, "a rational");
    std::string den = "1";
    if (at_sym("/")) {
      next();
      const Token d = expect_kind(Token::Kind::Int, "a denominator");
      if (d.text.find_first_not_of('0') == std::string::npos) fail(d, "zero denominator");
      den = d.text;
    }
    return Rational::from_strings((negative ? "-" : "") + num.text, den);
  }

  void declaration() {
    expect_word("var");
    const Token name = expect_kind(Token::Kind::Ident, "a variable name");
    if (index_.count(name.text)) fail(name, "variable " + name.text + " declared twice");
    expect_sym(":");
    const Token at = peek();
    const std::int64_t lo = integer();
    expect_sym("..");
    const std::int64_t hi = integer();
    expect_sym(";");
    if (lo > hi) fail(at, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
    if (static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) > 255) fail(at, "range of " + name.text + " spans more than 256 values");
    index_[name.text] = decls_.size();
    decls_.push_back({name.text, lo, hi});
  }

  bool at_statement_end() const { return at_sym("}") || at_word("query") || peek().kind == Token::Kind::End; }

  StmtPtr statements() {
    std::vector<StmtPtr> parts{statement()};
    while (at_sym(";")) {
      next();
      if (at_statement_end()) break;
      parts.push_back(statement());
    }
    StmtPtr out = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) out = seq(parts[i], out);
    return out;
  }

  StmtPtr block() {
    expect_sym("{");
    StmtPtr s = statements();
    expect_sym("}");
    return s;
  }

  StmtPtr statement() {
    const Token start = peek();
    if (at_word("skip")) {
      next();
      return skip();
    }
    if (at_word("if")) {
      next();
      BoolPtr g = bexpr();
      expect_word("then");
      StmtPtr a = block();
      expect_word("else");
      StmtPtr b = block();
      return if_then_else(std::move(g), std::move(a), std::move(b));
    }
    if (at_word("while")) {
      next();
      BoolPtr g = bexpr();
      expect_word("do");
      return while_loop(std::move(g), block());
    }
    if (at_word("choose")) {
      next();
      expect_sym("{");
      std::vector<std::pair<Rational, StmtPtr>> branches;
      do {
        Rational w = rational();
        expect_sym(":");
        StmtPtr b = at_sym("{") ? block() : statement();
        branches.emplace_back(std::move(w), std::move(b));
        if (at_sym(",")) next();
      } while (!at_sym("}"));
      expect_sym("}");
      try {
        return choose(std::move(branches));
      } catch (const DomainError& e) {
        fail(start, e.what());
      }
    }
    if (peek().kind == Token::Kind::Ident) {
      const Token name = next();
      const std::size_t v = lookup(name);
      expect_sym(":=");
      if (!at_sym("{")) return det_assign(v, aexpr());
      next();
      DistLiteral dist;
      do {
        if (!dist.empty()) expect_sym(",");
        const Token at = peek();
        const std::int64_t value = integer();
        if (!decls_[v].contains(value)) fail(at, out_of_range(value, v));
        expect_sym(":");
        dist.emplace_back(value, rational());
      } while (!at_sym("}"));
      expect_sym("}");
      try {
        return prob_assign(v, std::move(dist));
      } catch (const DomainError& e) {
        fail(name, e.what());
      }
    }
    fail(start, "expected a statement but found " + describe(start));
  }

  ArithPtr aexpr() {
    ArithPtr e = term();
    while (at_sym("+") || at_sym("-")) {
      const auto kind = next().text == "+" ? ArithExpr::Kind::Add : ArithExpr::Kind::Sub;
      e = arith(kind, e, term());
    }
    return e;
  }

  ArithPtr term() {
    ArithPtr e = factor();
    while (at_sym("*")) {
      next();
      e = arith(ArithExpr::Kind::Mul, e, factor());
    }
    return e;
  }

  ArithPtr factor() {
    if (at_sym("-")) {
      next();
      // Fold negative literals so the full int64 range is expressible.
      if (peek().kind == Token::Kind::Int) return lit(unsigned_literal(next(), true));
      return arith(ArithExpr::Kind::Neg, factor());
    }
    if (at_sym("(")) {
      next();
      ArithPtr e = aexpr();
      expect_sym(")");
      return e;
    }
    if (peek().kind == Token::Kind::Int) return lit(unsigned_literal(next(), false));
    if (peek().kind == Token::Kind::Ident) return var(lookup(next()));
    fail(peek(), "expected an arithmetic expression but found " + describe(peek()));
  }

  BoolPtr bexpr() {
    BoolPtr e = conjunction();
    while (at_word("or")) {
      next();
      e = logic(BoolExpr::Kind::Or, e, conjunction());
    }
    return e;
  }

  BoolPtr conjunction() {
    BoolPtr e = negation();
    while (at_word("and")) {
      next();
      e = logic(BoolExpr::Kind::And, e, negation());
    }
    return e;
  }

  BoolPtr negation() {
    if (at_word("not")) {
      next();
      return logic(BoolExpr::Kind::Not, negation());
    }
    return batom();
  }

  std::optional<CmpOp> comparison_op() {
    static const std::pair<const char*, CmpOp> ops[] = {{"=", CmpOp::Eq},  {"==", CmpOp::Eq}, {"!=", CmpOp::Ne},
                                                        {"<", CmpOp::Lt},  {"<=", CmpOp::Le}, {">", CmpOp::Gt},
                                                        {">=", CmpOp::Ge}};
    for (const auto& [sym, op] : ops) {
      if (at_sym(sym)) {
        next();
        return op;
      }
    }
    return std::nullopt;
  }

  BoolPtr batom() {
    if (at_word("true")) {
      next();
      return bool_const(true);
    }
    if (at_word("false")) {
      next();
      return bool_const(false);
    }
    const std::size_t saved = pos_;
    try {
      ArithPtr a = aexpr();
      auto op = comparison_op();
      if (!op) fail(peek(), "expected a comparison but found " + describe(peek()));
      return cmp(*op, std::move(a), aexpr());
    } catch (const ParseError& as_comparison) {
      pos_ = saved;
      if (!at_sym("(")) throw;
      try {
        next();
        BoolPtr e = bexpr();
        expect_sym(")");
        return e;
      } catch (const ParseError& as_group) {
        if (later(as_comparison, as_group)) throw as_comparison;
        throw;
      }
    }
  }

  QueryPredicate query() {
    const Token start = peek();
    std::vector<QueryTerm> terms;
    do {
      if (!terms.empty()) next();
      terms.push_back(query_term());
    } while (at_sym("+"));
    try {
      return QueryPredicate(std::move(terms));
    } catch (const DomainError& e) {
      fail(start, e.what());
    }
  }

  QueryTerm query_term() {
    if (at_sym("[")) {
      next();
      BoolPtr b = bexpr();
      expect_sym("]");
      return {Rational(1), std::move(b)};
    }
    if (peek().kind == Token::Kind::Int || at_sym("-")) {
      const std::size_t saved = pos_;
      try {
        Rational w = rational();
        if (at_sym("*")) {
          next();
          expect_sym("[");
          BoolPtr b = bexpr();
          expect_sym("]");
          return {std::move(w), std::move(b)};
        }
        if (at_sym("+") || at_sym(";") || peek().kind == Token::Kind::End || at_word("query")) return {std::move(w), nullptr};
      } catch (const ParseError&) {
      }
      pos_ = saved;
    }
    return {Rational(1), bexpr()};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Decls decls_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

ParsedFile parse(const std::string& source) { return Parser(lex(source), {}).file(); }

QueryPredicate parse_query(const std::string& text, const Decls& decls) { return Parser(lex(text), decls).query_only(); }

Valuation parse_valuation(const std::string& text, const Decls& decls) { return Parser(lex(text), decls).valuation_only(); }

}  // namespace exmon::lang
