#include "tsurf/symring/parse.hpp"

#include <cctype>
#include <string>

#include "tsurf/symring/derivation.hpp"
#include "tsurf/symring/radfrac.hpp"

namespace tsurf::sym {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const NameLookup* lookup) : src_(src), lookup_(lookup) {}

  RadFrac run() {
    RadFrac v = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("symbolic parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                     std::string(src_) + "\"");
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RadFrac expr() {
    RadFrac v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RadFrac term() {
    RadFrac v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        v = divide(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  RadFrac divide(const RadFrac& num, const RadFrac& den, std::size_t at) {
    if (den.is_zero()) {
      pos_ = at;
      fail("division by zero");
    }
    for (int n = 1; n <= 64; ++n) {
      if (den == x_pow(n)) return num.div_X(n);
      if (den.p().degree() < 2 * n) break;
    }
    if (den.has_radical() || den.k() != 0 || den.p().degree() > 0) {
      pos_ = at;
      fail("division only by c*A^k or X^n");
    }
    try {
      return num.scaled(RatExpr(1) / den.p().coeff(0));
    } catch (const LocalizationError&) {
      pos_ = at;
      fail("division only by c*A^k or X^n");
    }
  }

  static RadFrac x_pow(int n) {
    RadFrac r(1);
    for (int i = 0; i < n; ++i) r *= RadFrac::X();
    return r;
  }

  RadFrac unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RadFrac power() {
    RadFrac base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const int n = std::stoi(std::string(src_.substr(start, pos_ - start)));
      RadFrac r(1);
      for (int i = 0; i < n; ++i) r *= base;
      return r;
    }
    return base;
  }

  RadFrac atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RadFrac v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return RadFrac(RatExpr(mpq_class(std::string(src_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return name(src_.substr(start, pos_ - start), start);
    }
    fail("unexpected character");
  }

  RadFrac name(std::string_view id, std::size_t at) {
    static constexpr std::pair<std::string_view, Gen> kGens[] = {
        {"A", Gen::A}, {"A1", Gen::A1}, {"A2", Gen::A2}, {"A3", Gen::A3},
        {"T", Gen::T}, {"T1", Gen::T1}, {"T2", Gen::T2}};
    for (const auto& [n, g] : kGens) {
      if (id == n) return RadFrac(RatExpr::gen(g));
    }
    if (id == "z") return RadFrac::z();
    if (id == "s") return RadFrac::s();
    if (id == "X") return RadFrac::X();
    if (id == "a") return RadFrac(log_derivative_A());
    if (id == "Da") return RadFrac(d_log_derivative_A());
    if (id == "Sig") return RadFrac(sigma());
    if (id == "Sig1") return RadFrac(sigma_prime());
    if (lookup_ && *lookup_) {
      if (auto v = (*lookup_)(id)) return *v;
    }
    pos_ = at;
    fail("unknown identifier '" + std::string(id) + "'");
  }

  std::string_view src_;
  const NameLookup* lookup_;
  std::size_t pos_ = 0;
};

}  // namespace

RadFrac parse_radfrac(std::string_view text) { return Parser(text, nullptr).run(); }

RadFrac parse_radfrac(std::string_view text, const NameLookup& lookup) { return Parser(text, &lookup).run(); }

ZPoly parse_zpoly(std::string_view text) {
  const RadFrac r = parse_radfrac(text);
  if (r.has_radical() || r.k() != 0) throw InputError("expected a polynomial in z: \"" + std::string(text) + "\"");
  return r.p();
}

RatExpr parse_ratexpr(std::string_view text) {
  const ZPoly p = parse_zpoly(text);
  if (p.degree() > 0) throw InputError("expected an expression free of z: \"" + std::string(text) + "\"");
  return p.coeff(0);
}

}  // namespace tsurf::sym
