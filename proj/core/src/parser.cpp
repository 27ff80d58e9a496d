#include "ppk/parser.hpp"

#include <cctype>
#include <string>

#include "ppk/error.hpp"

namespace ppk {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vars& vars) : text_(text), vars_(vars) {}

  RatExpr run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    RatExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatExpr expr() {
    RatExpr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs += term();
      } else if (accept('-')) {
        lhs -= term();
      } else {
        return lhs;
      }
    }
  }

  RatExpr term() {
    RatExpr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatExpr rhs = unary();
        if (rhs.is_zero()) throw DivisionByZero("division by zero polynomial at position " + std::to_string(at));
        lhs /= rhs;
      } else {
        return lhs;
      }
    }
  }

  RatExpr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RatExpr power() {
    RatExpr base = primary();
    while (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("exponent must be a nonnegative integer literal", at);
      }
      Integer n = integer_literal();
      if (n > 4096) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<std::uint32_t>(n.get_ui()));
    }
    return base;
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RatExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatExpr e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatExpr(vars_, Rational(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_->index_of(name);
      if (!idx) throw ParseError("undeclared identifier '" + name + "'", start);
      return RatExpr::variable(vars_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse(std::string_view text, const Vars& vars) {
  return Parser(text, vars).run();
}

Rational parse_rational(std::string_view text) {
  static const Vars none = make_vars({});
  RatExpr e = parse(text, none);
  return e.constant_value();
}

}  // namespace ppk
