#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace liejets {

// Exact arbitrary-precision rational scalar. boost's cpp_rational keeps
// gcd(|num|, den) = 1 and den >= 1 as class invariants, which is exactly
// the canonical form we serialize ("p/q", or "p" when q = 1).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematically meaningful failure (Jacobi violated, not a structure,
// obstruction hit when success was required). CLI maps this to exit 1,
// InputError to exit 2.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i == s.size() || s[i] == '/') throw InputError("bad rational literal: " + s);
  bool seen_slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (seen_slash || j + 1 == s.size()) throw InputError("bad rational literal: " + s);
      seen_slash = true;
    } else if (s[j] < '0' || s[j] > '9') {
      throw InputError("bad rational literal: " + s);
    }
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  try {
    Rational r{body};
    if (denominator(r) == 0) throw std::runtime_error("zero denominator");
    return r;
  } catch (const std::exception&) {
    throw InputError("bad rational literal: " + s);
  }
}

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

}  // namespace liejets
