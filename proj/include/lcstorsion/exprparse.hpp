#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcstorsion/freering.hpp"

namespace lcs {

// Grammar (whitespace insensitive, ASCII tokens):
//   expr   := term (('+' | '-') term)*
//   term   := ('-')? factor ('*' factor)*
//   factor := atom ('^' INT)?
//   atom   := INT | VAR | '(' expr ')' | '[' expr (',' expr)+ ']'
//   VAR    := 'x' INT          with INT >= 1
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { literal, variable, sum, product, power, bracket };
  Kind kind;
  BigInt value;                 // literal
  Var var = 0;                  // variable
  std::vector<ExprPtr> children;  // sum / product / bracket; power: single child
  std::vector<int> signs;       // sum only: +1 / -1 per child
  std::uint64_t exponent = 0;   // power, >= 1
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t off, std::vector<std::string> expect, std::string found)
      : std::runtime_error(render(off, expect, found)),
        offset(off),
        expected(std::move(expect)),
        found_text(std::move(found)) {}

  std::size_t offset;
  std::vector<std::string> expected;
  std::string found_text;

  static std::string render(std::size_t off, const std::vector<std::string>& expect,
                            const std::string& found) {
    std::string s = "parse error at byte " + std::to_string(off) + ": expected ";
    for (std::size_t i = 0; i < expect.size(); ++i) {
      if (i) s += i + 1 == expect.size() ? " or " : ", ";
      s += expect[i];
    }
    s += ", found " + found;
    return s;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input", "'+'", "'-'", "'*'", "'^'"});
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ >= s_.size()
                            ? std::string("end of input")
                            : "'" + std::string(1, s_[pos_]) + "'";
    throw ParseError(pos_, std::move(expected), std::move(found));
  }

  BigInt integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail({what});
    return BigInt(s_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::sum;
    node->children.push_back(term());
    node->signs.push_back(1);
    for (;;) {
      if (accept('+')) {
        node->children.push_back(term());
        node->signs.push_back(1);
      } else if (accept('-')) {
        node->children.push_back(term());
        node->signs.push_back(-1);
      } else {
        break;
      }
    }
    if (node->children.size() == 1 && node->signs[0] == 1) return node->children[0];
    return node;
  }

  ExprPtr term() {
    bool negate = accept('-');
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::product;
    node->children.push_back(factor());
    while (accept('*')) node->children.push_back(factor());
    ExprPtr out = node->children.size() == 1 ? node->children[0] : ExprPtr(node);
    if (negate) {
      auto neg = std::make_shared<Expr>();
      neg->kind = Expr::Kind::sum;
      neg->children.push_back(out);
      neg->signs.push_back(-1);
      return neg;
    }
    return out;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      BigInt e = integer("exponent");
      if (e < 1) throw ParseError(at, {"integer >= 1"}, "'" + e.str() + "'");
      if (e > 1000000) throw ParseError(at, {"exponent <= 1000000"}, "'" + e.str() + "'");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::power;
      node->children.push_back(std::move(base));
      node->exponent = e.convert_to<std::uint64_t>();
      return node;
    }
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail({"integer", "variable", "'('", "'['"});
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::literal;
      node->value = integer("integer");
      return node;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      BigInt idx = integer("variable index");
      if (idx < 1) throw ParseError(at, {"variable index >= 1"}, "'" + idx.str() + "'");
      if (idx > 1000000000) throw ParseError(at, {"variable index <= 10^9"}, "'" + idx.str() + "'");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::variable;
      node->var = idx.convert_to<Var>();
      return node;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail({"')'", "'+'", "'-'", "'*'", "'^'"});
      return e;
    }
    if (c == '[') {
      ++pos_;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::bracket;
      node->children.push_back(expr());
      if (!peek_is(',')) fail({"','"});
      while (accept(',')) node->children.push_back(expr());
      if (!accept(']')) fail({"']'", "','"});
      return node;
    }
    fail({"integer", "variable", "'('", "'['"});
  }
};

}  // namespace detail

inline ExprPtr parse(const std::string& text) { return detail::Parser(text).parse(); }

inline Poly eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return Poly::constant(e.value);
    case Expr::Kind::variable:
      return Poly::variable(e.var);
    case Expr::Kind::sum: {
      Poly acc;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Poly c = eval(*e.children[i]);
        acc = e.signs[i] > 0 ? acc + c : acc - c;
      }
      return acc;
    }
    case Expr::Kind::product: {
      Poly acc = Poly::unit();
      for (const auto& c : e.children) acc = acc * eval(*c);
      return acc;
    }
    case Expr::Kind::power:
      return eval(*e.children[0]).pow(e.exponent);
    case Expr::Kind::bracket: {
      std::vector<Poly> args;
      args.reserve(e.children.size());
      for (const auto& c : e.children) args.push_back(eval(*c));
      return commutator(args);
    }
  }
  throw std::logic_error("unreachable expression kind");
}

inline Poly eval_string(const std::string& text) { return eval(*parse(text)); }

// Canonical rendering; round-trips through parse + eval.
inline std::string format(const Poly& p) { return to_string(p); }

}  // namespace lcs
