#include "tsurf/exprlang/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace tsurf::expr {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const std::vector<Var>& vars) : src_(src), vars_(vars) {}

  Expr parse_all() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError(pos_, "empty expression");
    Expr e = sum();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(pos_, unexpected());
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string unexpected() const {
    if (pos_ >= src_.size()) return "unexpected end of input";
    return std::string("unexpected '") + src_[pos_] + "'";
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (accept('+')) {
        e = Expr::binary(Expr::Kind::add, e, product());
      } else if (accept('-')) {
        e = Expr::binary(Expr::Kind::sub, e, product());
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = Expr::binary(Expr::Kind::mul, e, unary());
      } else if (accept('/')) {
        e = Expr::binary(Expr::Kind::div, e, unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const int n = integer();
    if (paren && !accept(')')) throw ParseError(pos_, "expected ')'");
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == '^') throw ParseError(pos_, "chained '^' needs parentheses");
    return Expr::pow(base, n);
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    skip_space();
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(pos_, "exponent must be an integer");
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E'))
      throw ParseError(start, "exponent must be an integer");
    int n = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + digits, src_.data() + pos_, n);
    if (ec != std::errc()) throw ParseError(digits, "exponent out of range");
    return sign * n;
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - d;
    };
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) throw ParseError(start, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw ParseError(pos_, "malformed exponent in number");
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw ParseError(start, "malformed number");
    return Expr::number(value, std::string(text));
  }

  std::optional<Func> function(std::string_view name) const {
    for (Func f : {Func::sin, Func::cos, Func::tan, Func::exp, Func::log, Func::sqrt, Func::atan})
      if (func_name(f) == name) return f;
    return std::nullopt;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError(pos_, unexpected());
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (auto f = function(name)) {
        if (!accept('(')) throw ParseError(pos_, "expected '(' after " + std::string(name));
        Expr arg = sum();
        if (!accept(')')) throw ParseError(pos_, "expected ')'");
        return Expr::call(*f, arg);
      }
      if (name == "pi") return Expr::pi();
      for (Var v : vars_)
        if (var_name(v) == name) return Expr::variable(v);
      throw UnknownIdentifierError(start, std::string(name));
    }
    throw ParseError(pos_, unexpected());
  }

  std::string_view src_;
  const std::vector<Var>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view src, const std::vector<Var>& vars) { return Parser(src, vars).parse_all(); }

Expr parse(std::string_view src) {
  static const std::vector<Var> all = {Var::u, Var::v, Var::t, Var::s};
  return parse(src, all);
}

}  // namespace tsurf::expr
