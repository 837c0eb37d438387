#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/exprlang/expr.hpp"

namespace tsurf::expr {

class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : InputError("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(std::size_t offset, std::string name)
      : ParseError(offset, "unknown identifier '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Grammar, loosest binding first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'pi' | var | func '(' sum ')' | '(' sum ')'
// `integer` may carry a sign and may be parenthesized: u^-2, u^(-2).
Expr parse(std::string_view src);
// Only the listed variables are accepted; others are unknown identifiers.
Expr parse(std::string_view src, const std::vector<Var>& vars);

}  // namespace tsurf::expr
