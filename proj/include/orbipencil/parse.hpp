#pragma once

#include <cctype>
#include <string>

#include "orbipencil/polynomial.hpp"

namespace orbipencil {

// Expression grammar for polynomial input:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= atom ['^' nat]
//   atom  := number | 'x' | 'y' | 'z' | '(' expr ')'
//   number:= digits ['/' digits]
// '^' binds tighter than '*', '*' tighter than '+'/'-'; juxtaposition is a
// syntax error. In the Q(sqrt 3) instantiation the extra symbol 'u' (with
// u^2 = 3) is accepted as an atom.
template <class K>
class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Polynomial<K> parse() {
    skip_ws();
    Polynomial<K> r = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return r;
  }

 private:
  using P = Polynomial<K>;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  P parse_expr() {
    bool neg = false;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      if (s_[pos_] == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    P acc = parse_term();
    if (neg) acc = -acc;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      bool minus = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      bool n2 = minus;
      while (peek() == '+' || peek() == '-') {
        if (s_[pos_] == '-') n2 = !n2;
        ++pos_;
        skip_ws();
      }
      P t = parse_term();
      acc = n2 ? acc - t : acc + t;
      skip_ws();
    }
    return acc;
  }

  P parse_term() {
    P acc = parse_factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      acc = acc * parse_factor();
      skip_ws();
    }
    return acc;
  }

  P parse_factor() {
    P base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw SyntaxError("exponent must be a non-negative integer", at);
      long e = parse_nat();
      base = base.pow(e);
    }
    return base;
  }

  P parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = parse_expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return P(parse_number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      switch (c) {
        case 'x': return P::variable(0);
        case 'y': return P::variable(1);
        case 'z': return P::variable(2);
        case 'u':
          if constexpr (K::has_radical) return P(K::radical());
          throw UnknownVariable(std::string(1, c), pos_ - 1);
        default: throw UnknownVariable(std::string(1, c), pos_ - 1);
      }
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  long parse_nat() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      return std::stol(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw SyntaxError("integer literal too large", start);
    }
  }

  K parse_number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) throw SyntaxError("expected denominator digits", pos_);
      den = s_.substr(dstart, pos_ - dstart);
      if (mpz_class(den) == 0) throw SyntaxError("zero denominator", dstart);
    }
    return K(Rat(mpq_class(num + "/" + den)));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

template <class K = Rat>
Polynomial<K> parse_poly(const std::string& text) {
  return PolyParser<K>(text).parse();
}

}  // namespace orbipencil
