// Recursive-descent parser for the polynomial expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' exponent]
//   base   := INTEGER | VARIABLE | '(' expr ')'
// Implicit multiplication is rejected; exponents are non-negative unless the
// Laurent flag is set, in which case a bare variable may carry '^(-k)'.
#ifndef KNOTCERT_PARSE_HPP
#define KNOTCERT_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/poly.hpp"

namespace knotcert {

namespace detail {

struct Token {
  enum Kind { Integer, Name, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(
                                     src_[pos_])))
      ++pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::End, ""};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      tok_ = {Token::Integer, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Name, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "+"}; return;
      case '-': tok_ = {Token::Minus, "-"}; return;
      case '*': tok_ = {Token::Star, "*"}; return;
      case '^': tok_ = {Token::Caret, "^"}; return;
      case '(': tok_ = {Token::LParen, "("}; return;
      case ')': tok_ = {Token::RParen, ")"}; return;
      default:
        throw ParseError(std::string("malformed token '") + c + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Token::End, ""};
};

template <class Ring>
class ExprParser {
 public:
  ExprParser(std::string_view src, Ring ring, std::vector<std::string> vars,
             bool laurent)
      : lex_(src),
        ring_(std::move(ring)),
        vars_(std::move(vars)),
        laurent_(laurent) {}

  MultiPoly<Ring> run() {
    MultiPoly<Ring> f = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("unexpected trailing input near '" + lex_.peek().text +
                       "'");
    return f;
  }

 private:
  using P = MultiPoly<Ring>;

  P expr() {
    bool neg = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      neg = true;
    }
    P acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Token::Plus ||
           lex_.peek().kind == Token::Minus) {
      bool minus = lex_.take().kind == Token::Minus;
      P t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  P term() {
    P acc = factor();
    while (lex_.peek().kind == Token::Star) {
      lex_.take();
      acc = acc * factor();
    }
    // Adjacent operands without an operator (implicit multiplication) stop
    // here and surface as a trailing-input error upstream.
    return acc;
  }

  P factor() {
    bool was_var = false;
    std::string var_name;
    P base = this->base(was_var, var_name);
    if (lex_.peek().kind != Token::Caret) return base;
    lex_.take();
    long long e = exponent();
    if (e < 0) {
      if (!laurent_)
        throw ParseError("exponent < 0 in non-Laurent context");
      if (!was_var)
        throw ParseError("negative exponent requires a bare variable base");
      P r(base.ring(), base.vars());
      Monomial m{std::vector<int>(base.vars().size(), 0)};
      m.exps[base.var_index(var_name)] = static_cast<int>(e);
      r.add_term(std::move(m), ring_.one());
      return r;
    }
    return base.pow(static_cast<unsigned>(e));
  }

  long long exponent() {
    if (lex_.peek().kind == Token::Integer)
      return std::stoll(lex_.take().text);
    if (lex_.peek().kind == Token::LParen) {
      lex_.take();
      bool neg = false;
      if (lex_.peek().kind == Token::Minus) {
        lex_.take();
        neg = true;
      }
      if (lex_.peek().kind != Token::Integer)
        throw ParseError("malformed exponent");
      long long v = std::stoll(lex_.take().text);
      if (lex_.peek().kind != Token::RParen)
        throw ParseError("missing ')' in exponent");
      lex_.take();
      return neg ? -v : v;
    }
    throw ParseError("malformed exponent");
  }

  P base(bool& was_var, std::string& var_name) {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Integer:
        return P::constant(ring_, vars_, ring_.from_int(Int(t.text)));
      case Token::Name: {
        bool known = false;
        for (const auto& v : vars_)
          if (v == t.text) known = true;
        if (!known) throw ParseError("unknown variable '" + t.text + "'");
        was_var = true;
        var_name = t.text;
        return P::variable(ring_, vars_, t.text);
      }
      case Token::LParen: {
        P inner = expr();
        if (lex_.peek().kind != Token::RParen)
          throw ParseError("missing ')'");
        lex_.take();
        return inner;
      }
      default:
        throw ParseError("malformed token '" + t.text + "'");
    }
  }

  Lexer lex_;
  Ring ring_;
  std::vector<std::string> vars_;
  bool laurent_;
};

}  // namespace detail

template <class Ring>
MultiPoly<Ring> parse_poly(std::string_view text, Ring ring,
                           std::vector<std::string> vars,
                           bool laurent = false) {
  detail::ExprParser<Ring> p(text, std::move(ring), std::move(vars), laurent);
  return p.run();
}

inline MultiPoly<IntegerRing> parse_z(std::string_view text,
                                      std::vector<std::string> vars,
                                      bool laurent = false) {
  return parse_poly(text, IntegerRing{}, std::move(vars), laurent);
}

}  // namespace knotcert

#endif  // KNOTCERT_PARSE_HPP
