#pragma once

// Recursive-descent parser for the textual scalar grammar:
//   gaussian rationals "3/2+1/2i", variables "z0","zb0","u",
//   operators + - * / and ^ with nonnegative integer powers, parentheses.

#include <cctype>
#include <stdexcept>
#include <string>

#include "genred/ratfun.hpp"

namespace genred {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

namespace detail {

class ScalarParser {
 public:
  ScalarParser(const std::string& src, const VarTable& tbl) : s_(src), tbl_(tbl) {}

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + s_.substr(pos_) + "'");
    return r;
  }

 private:
  RatFun expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    RatFun r = term();
    if (neg) r = -r;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        RatFun t = term();
        r = (c == '+') ? r + t : r - t;
      } else {
        return r;
      }
    }
  }

  RatFun term() {
    RatFun r = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*' || c == '/') {
        get();
        RatFun t = factor();
        if (c == '/') {
          if (t.is_zero()) throw ParseError("division by zero");
          r = r / t;
        } else {
          r = r * t;
        }
      } else {
        return r;
      }
    }
  }

  RatFun factor() {
    RatFun b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::string digits;
      while (std::isdigit(peek())) digits += get();
      if (digits.empty()) throw ParseError("expected integer exponent after '^'");
      int e = std::stoi(digits);
      RatFun r = RatFun::constant(tbl_.size(), GaussianRational(1));
      for (int k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }

  RatFun base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      RatFun r = expr();
      skip_ws();
      if (get() != ')') throw ParseError("expected ')'");
      return r;
    }
    if (std::isdigit(c)) return number();
    if (c == 'i' && !std::isalnum(peek(1))) {
      get();
      return RatFun::constant(tbl_.size(), GaussianRational::unit_i());
    }
    if (std::isalpha(c)) {
      std::string name;
      while (std::isalnum(peek()) || peek() == '_') name += get();
      int v = tbl_.find(name);
      if (v < 0) throw ParseError("unknown variable '" + name + "'");
      return RatFun::variable(tbl_.size(), v);
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  // Number token: "3", "3/2", "3i", "3/2i". A '/' is part of the literal only
  // when followed by digits ending in a digit or 'i' with no second '/', so
  // "1/z0" parses as division.
  RatFun number() {
    std::string intpart;
    while (std::isdigit(peek())) intpart += get();
    std::string denpart;
    if (peek() == '/') {
      size_t save = pos_;
      get();
      while (std::isdigit(peek())) denpart += get();
      bool literal = !denpart.empty() && !(std::isalpha(peek()) && peek() != 'i');
      if (!literal) {
        // back off and let '/' act as division (e.g. "1/z0")
        pos_ = save;
        denpart.clear();
      }
    }
    bool imag = false;
    if (peek() == 'i' && !std::isalnum(peek(1))) {
      get();
      imag = true;
    }
    Rat r;
    if (denpart.empty()) {
      r = Rat(intpart);
    } else {
      if (Rat(denpart) == 0) throw ParseError("coefficient with zero denominator");
      r = Rat(intpart) / Rat(denpart);
    }
    r.canonicalize();
    GaussianRational g = imag ? GaussianRational(Rat(0), r) : GaussianRational(r);
    return RatFun::constant(tbl_.size(), g);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  const std::string& s_;
  const VarTable& tbl_;
  size_t pos_ = 0;
};

}  // namespace detail

inline RatFun parse_scalar(const std::string& src, const VarTable& tbl) {
  return detail::ScalarParser(src, tbl).parse();
}

// Gaussian rational literal, no variables allowed.
inline GaussianRational parse_gaussian(const std::string& src) {
  auto tbl = VarTable::real_chart({});
  RatFun r = detail::ScalarParser(src, *tbl).parse();
  if (!r.den_is_one() || !r.num().is_constant())
    throw ParseError("expected a constant scalar: " + src);
  return r.num().constant_value();
}

}  // namespace genred
