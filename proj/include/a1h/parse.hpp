#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "a1h/errors.hpp"
#include "a1h/polynomial.hpp"

namespace a1h {

namespace detail {

// expr   := [+|-] term { (+|-) term }
// term   := factor { * factor }
// factor := atom [ ^ digits ]
// atom   := digits [ / digits ] | name | ( expr )
class ExprParser {
 public:
  ExprParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      std::string_view d = digits();
      if (d.empty()) throw ParseError("expected non-negative integer exponent", at);
      if (d.size() > 6) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(d))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string_view num = digits();
      std::string_view den = "1";
      // A '/' directly after digits is part of a rational literal.
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        den = digits();
        if (den.empty()) throw ParseError("expected denominator digits", at);
        if (den.find_first_not_of('0') == std::string_view::npos)
          throw ParseError("zero denominator", at);
      }
      check_no_implicit_product();
      return Polynomial::constant(ring_, Scalar::from_digits(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (!ring_->index_of(name)) throw ParseError("unknown variable '" + name + "'", start);
      check_no_implicit_product();
      return Polynomial::variable(ring_, name);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  void check_no_implicit_product() {
    skip();
    if (pos_ < s_.size()) {
      const char n = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(n)) || n == '(')
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
    }
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression over the variables of `ring` into expanded normal form.
/// Throws ParseError (with byte position) on malformed text or unknown names.
inline Polynomial poly_parse(std::string_view text, const RingPtr& ring) {
  return detail::ExprParser(text, ring).run();
}

}  // namespace a1h
