#pragma once

// Shared recursive-descent parser for the three text grammars (Laurent
// polynomials, class expressions, multivariate polynomials). Each grammar
// supplies an algebra with number/ident/bracket atoms and ring operations.

#include <string>
#include <string_view>
#include <vector>

#include "realmot/error.hpp"
#include "realmot/numeric.hpp"

namespace realmot::detail {

struct Token {
  enum Kind { Num, Ident, Bracket, Op, End } kind;
  std::string text;
  Rational num;
  char op = 0;
  std::size_t pos = 0;
};

[[noreturn]] void parse_error(std::size_t pos, const std::string& what);

std::vector<Token> tokenize(std::string_view text);

template <class A>
class ExprParser {
 public:
  using V = typename A::Value;
  ExprParser(A& alg, std::string_view text) : alg_(alg), toks_(tokenize(text)) {}

  V parse_all() {
    if (peek().kind == Token::End) parse_error(peek().pos, "empty expression");
    V v = expr();
    if (peek().kind != Token::End) parse_error(peek().pos, "unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is_op(char c) const { return peek().kind == Token::Op && peek().op == c; }
  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Token::Num || t.kind == Token::Ident || t.kind == Token::Bracket ||
           (t.kind == Token::Op && t.op == '(');
  }

  V expr() {
    V v = term();
    while (is_op('+') || is_op('-')) {
      char op = peek().op;
      ++i_;
      V r = term();
      v = op == '+' ? alg_.add(std::move(v), std::move(r)) : alg_.sub(std::move(v), std::move(r));
    }
    return v;
  }

  V term() {
    V v = factor();
    for (;;) {
      std::size_t pos = peek().pos;
      bool divide = false;
      if (is_op('*')) {
        ++i_;
      } else if (is_op('/')) {
        divide = true;
        ++i_;
      } else if (!starts_atom()) {
        break;
      }
      V r = factor();
      v = divide ? alg_.div(std::move(v), std::move(r), pos) : alg_.mul(std::move(v), std::move(r), pos);
    }
    return v;
  }

  V factor() {
    if (is_op('-')) {
      ++i_;
      return alg_.neg(factor());
    }
    if (is_op('+')) {
      ++i_;
      return factor();
    }
    V base = atom();
    if (!is_op('^')) return base;
    std::size_t pos = peek().pos;
    ++i_;
    bool paren = false;
    if (is_op('(')) {
      paren = true;
      ++i_;
    }
    bool neg = false;
    if (is_op('-')) {
      neg = true;
      ++i_;
    }
    if (peek().kind != Token::Num || peek().num.get_den() != 1)
      parse_error(peek().pos, "expected integer exponent");
    if (peek().num > 100000) parse_error(peek().pos, "exponent too large");
    long e = static_cast<long>(peek().num.get_num().get_si());
    ++i_;
    if (paren) {
      if (!is_op(')')) parse_error(peek().pos, "expected ')'");
      ++i_;
    }
    return alg_.power(std::move(base), neg ? -e : e, pos);
  }

  V atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Num:
        ++i_;
        return alg_.number(t.num, t.pos);
      case Token::Ident:
        ++i_;
        return alg_.ident(t.text, t.pos);
      case Token::Bracket:
        ++i_;
        return alg_.bracket(t.text, t.pos);
      case Token::Op:
        if (t.op == '(') {
          ++i_;
          V v = expr();
          if (!is_op(')')) parse_error(peek().pos, "expected ')'");
          ++i_;
          return v;
        }
        break;
      case Token::End:
        parse_error(t.pos, "unexpected end of input");
    }
    parse_error(t.pos, "unexpected '" + t.text + "'");
  }

  A& alg_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace realmot::detail
