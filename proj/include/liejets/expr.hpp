#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "liejets/rational_function.hpp"

namespace liejets {

// Parser for coordinate expressions appearing in input files: integers,
// variables x1..xn, + - * / ^ and parentheses. "1/2" goes through the
// ordinary division path and lands on the same rational.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, unsigned nvars)
      : text_(text), nvars_(nvars) {}

  RationalFunction parse() {
    RationalFunction r = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw InputError("trailing input in expression: " + std::string(text_));
    return r;
  }

 private:
  RationalFunction parse_sum() {
    RationalFunction acc = parse_product();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += parse_product();
      } else if (peek() == '-') {
        ++pos_;
        acc -= parse_product();
      } else {
        return acc;
      }
    }
  }

  RationalFunction parse_product() {
    RationalFunction acc = parse_factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= parse_factor();
      } else if (peek() == '/') {
        ++pos_;
        acc = acc / parse_factor();
      } else {
        return acc;
      }
    }
  }

  RationalFunction parse_factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -parse_factor();
    }
    if (peek() == '+') {
      ++pos_;
      return parse_factor();
    }
    RationalFunction base = parse_primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      unsigned e = parse_uint();
      RationalFunction p = RationalFunction::constant(nvars_, Rational(1));
      for (unsigned i = 0; i < e; ++i) p *= base;
      return p;
    }
    return base;
  }

  RationalFunction parse_primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction inner = parse_sum();
      skip_ws();
      if (peek() != ')') throw InputError("missing ')' in expression: " + std::string(text_));
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      unsigned idx = parse_uint();
      if (idx < 1 || idx > nvars_)
        throw InputError("variable x" + std::to_string(idx) + " out of range");
      return RationalFunction::variable(nvars_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RationalFunction::constant(nvars_, Rational(parse_uint()));
    throw InputError("unexpected character in expression: " + std::string(text_));
  }

  unsigned parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw InputError("expected number in expression: " + std::string(text_));
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 1000000) throw InputError("numeric literal too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  unsigned nvars_;
  std::size_t pos_ = 0;
};

inline RationalFunction parse_expression(std::string_view text, unsigned nvars) {
  return ExpressionParser(text, nvars).parse();
}

inline std::string format(const Monomial& m) {
  std::string s;
  for (unsigned i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

inline std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (s.empty()) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono = format(m);
    if (mono.empty()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += mono;
    }
  }
  return s;
}

inline std::string format(const RationalFunction& f) {
  if (f.den().is_constant() && f.den().constant_value() == 1) return format(f.num());
  auto wrap = [](const Polynomial& p) {
    std::string s = format(p);
    if (p.terms().size() > 1 || s.find('*') != std::string::npos ||
        s.find('/') != std::string::npos)
      return "(" + s + ")";
    return s;
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

}  // namespace liejets
