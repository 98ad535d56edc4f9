#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ff/poly.hpp"

namespace brsieve {

// Thrown for malformed polynomial text; carries the 1-based column.
class ParseError : public Error {
 public:
  ParseError(size_t column, const std::string& token, const std::string& what)
      : Error(ErrorCode::kParse, "column " + std::to_string(column) + " near '" + token + "': " + what),
        column_(column),
        token_(token) {}
  size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  size_t column_;
  std::string token_;
};

// Accepts either an ascending coefficient list "[c0, c1, ...]" or an
// expression in x built from integers, + - * ^ and parentheses.
ZPoly parse_int_poly(std::string_view text);

// Same grammar; when the expression is a single product at top level the
// factors are returned separately (integer constants multiplied into the
// first factor). Used for user-declared factorizations such as
// "(x^2+3)*(x^3-19)".
std::vector<ZPoly> parse_poly_factors(std::string_view text);

}  // namespace brsieve
