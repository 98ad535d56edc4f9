#include "ff/poly_parse.hpp"

#include <cctype>

namespace brsieve {
namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  std::vector<ZPoly> parse_top() {
    skip_ws();
    if (peek() == '[') {
      ZPoly p = parse_list();
      expect_end();
      return {p};
    }
    // Top-level: sum of terms. Remember the factors when there is exactly one term.
    std::vector<ZPoly> factors;
    ZPoly acc = parse_term(&factors);
    bool single_term = true;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      char op = get();
      ZPoly t = parse_term(nullptr);
      acc = op == '+' ? acc + t : acc - t;
      single_term = false;
      skip_ws();
    }
    expect_end();
    if (!single_term || factors.size() <= 1) return {acc};
    return factors;
  }

 private:
  ZPoly parse_list() {
    get();  // '['
    std::vector<BigInt> coeffs;
    skip_ws();
    if (peek() == ']') {
      get();
      return ZPoly(std::move(coeffs));
    }
    while (true) {
      skip_ws();
      coeffs.push_back(parse_signed_integer());
      skip_ws();
      char c = peek();
      if (c == ',') {
        get();
        continue;
      }
      if (c == ']') {
        get();
        break;
      }
      error("expected ',' or ']'");
    }
    return ZPoly(std::move(coeffs));
  }

  BigInt parse_signed_integer() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    skip_ws();
    return neg ? BigInt(-parse_integer()) : parse_integer();
  }

  BigInt parse_integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  // term := ['-'|'+'] factor ('*' factor)*
  ZPoly parse_term(std::vector<ZPoly>* factors) {
    skip_ws();
    BigInt sign = 1;
    while (peek() == '-' || peek() == '+') {
      if (get() == '-') sign = -sign;
      skip_ws();
    }
    std::vector<ZPoly> local;
    local.push_back(parse_power());
    skip_ws();
    while (peek() == '*') {
      get();
      local.push_back(parse_power());
      skip_ws();
    }
    ZPoly prod = ZPoly::constant(sign);
    for (const auto& f : local) prod = prod * f;
    if (factors) {
      BigInt scalar = sign;
      for (const auto& f : local) {
        if (f.degree() <= 0) {
          scalar *= f.is_zero() ? BigInt(0) : f.lead();
        } else {
          factors->push_back(f);
        }
      }
      if (!factors->empty()) (*factors)[0] = (*factors)[0].scaled(scalar);
    }
    return prod;
  }

  // power := atom ['^' integer]
  ZPoly parse_power() {
    ZPoly base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      BigInt e = parse_integer();
      if (e > 4096) error("exponent too large");
      ZPoly r = ZPoly::constant(1);
      for (unsigned long i = 0; i < e.get_ui(); ++i) r = r * base;
      return r;
    }
    return base;
  }

  ZPoly parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      ZPoly inner = parse_term(nullptr);
      skip_ws();
      while (peek() == '+' || peek() == '-') {
        char op = get();
        ZPoly t = parse_term(nullptr);
        inner = op == '+' ? inner + t : inner - t;
        skip_ws();
      }
      if (peek() != ')') error("expected ')'");
      get();
      return inner;
    }
    if (c == 'x' || c == 'X') {
      get();
      return ZPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ZPoly::constant(parse_integer());
    error("unexpected token");
  }

  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) error("trailing input");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  [[noreturn]] void error(const std::string& what) const {
    std::string token = pos_ < s_.size() ? std::string(s_.substr(pos_, 1)) : std::string("<end>");
    throw ParseError(pos_ + 1, token, what);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

std::string_view strip_quotes(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
  return t;
}

}  // namespace

ZPoly parse_int_poly(std::string_view text) {
  auto factors = parse_poly_factors(text);
  ZPoly prod = ZPoly::constant(1);
  for (const auto& f : factors) prod = prod * f;
  return prod;
}

std::vector<ZPoly> parse_poly_factors(std::string_view text) {
  text = strip_quotes(text);
  if (text.empty()) throw ParseError(1, "<end>", "empty polynomial");
  return ExprParser(text).parse_top();
}

}  // namespace brsieve
