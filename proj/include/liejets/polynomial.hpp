#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "liejets/rational.hpp"

namespace liejets {

// Exponent vector; index i holds the power of x_{i+1}.
using Monomial = std::vector<unsigned>;

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

// Graded lexicographic order, "greater" flavour so that std::map iteration
// starts at the leading term: higher total degree wins, ties resolved by
// lexicographic comparison of exponent vectors.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial over Rational in variables x1..xn.
// Stored terms never carry a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Polynomial(unsigned nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(unsigned nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
  }

  // 1-based variable index.
  static Polynomial variable(unsigned nvars, unsigned i) {
    if (i < 1 || i > nvars) throw InputError("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i - 1] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static Polynomial term(unsigned nvars, Monomial m, const Rational& c) {
    if (m.size() != nvars) throw InputError("monomial size mismatch");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw MathError("polynomial is not constant");
    return terms_.begin()->second;
  }

  int total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(monomial_degree(terms_.begin()->first));
  }

  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::pair<const Monomial, Rational>& leading() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return *terms_.begin();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (unsigned i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    Polynomial r(a.nvars_);
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Formal partial derivative with respect to x_i (1-based).
  Polynomial derivative(unsigned i) const {
    if (i < 1 || i > nvars_) throw InputError("derivative index out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      unsigned e = m[i - 1];
      if (e == 0) continue;
      Monomial d = m;
      d[i - 1] = e - 1;
      r.add_term(d, c * Rational(e));
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& p) const {
    if (p.size() != nvars_) throw InputError("evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (unsigned i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < m[i]; ++e) t *= p[i];
      acc += t;
    }
    return acc;
  }

  // Substitute x_i -> image[i-1]; images are polynomials in any common
  // variable set. Used by tests that rebuild identities from scratch.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw InputError("substitution arity mismatch");
    unsigned out_vars = images.empty() ? 0 : images[0].nvars();
    Polynomial acc(out_vars);
    for (const auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(out_vars, c);
      for (unsigned i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < m[i]; ++e) t = t * images[i];
      acc += t;
    }
    return acc;
  }

 private:
  void check_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InputError("polynomial variable-count mismatch");
  }

  unsigned nvars_;
  TermMap terms_;
};

// Signed rational content: the unique c with P = c * P', P' having coprime
// integer coefficients and positive leading (graded-lex) coefficient.
inline Rational polynomial_content(const Polynomial& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : p.terms()) {
    num_gcd = boost::multiprecision::gcd(num_gcd, rational_num(c));
    Integer d = rational_den(c);
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  Rational content(num_gcd, den_lcm);
  if (p.leading().second < 0) content = -content;
  return content;
}

inline Polynomial unit_normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational c = polynomial_content(p);
  Polynomial r(p.nvars());
  for (const auto& [m, q] : p.terms()) r.add_term(m, q / c);
  return r;
}

// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  Polynomial rem = a, quot(a.nvars());
  const auto& [lbm, lbc] = b.leading();
  while (!rem.is_zero()) {
    const auto& [lrm, lrc] = rem.leading();
    Monomial q(a.nvars());
    for (unsigned i = 0; i < a.nvars(); ++i) {
      if (lrm[i] < lbm[i]) return std::nullopt;
      q[i] = lrm[i] - lbm[i];
    }
    Polynomial step = Polynomial::term(a.nvars(), q, lrc / lbc);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

namespace detail {

inline int degree_in(const Polynomial& p, unsigned v) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<int>(m[v - 1]));
  return d;
}

inline Polynomial coeff_in(const Polynomial& p, unsigned v, unsigned d) {
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m[v - 1] == d) {
      Monomial stripped = m;
      stripped[v - 1] = 0;
      r.add_term(stripped, c);
    }
  return r;
}

inline Polynomial shift_in(const Polynomial& p, unsigned v, unsigned d) {
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial shifted = m;
    shifted[v - 1] += d;
    r.add_term(shifted, c);
  }
  return r;
}

// Pseudo-remainder of a by b in the variable v (both nonzero, deg_v(b) >= 0).
inline Polynomial pseudo_rem(Polynomial a, const Polynomial& b, unsigned v) {
  int db = degree_in(b, v);
  Polynomial lb = coeff_in(b, v, static_cast<unsigned>(db));
  while (!a.is_zero()) {
    int da = degree_in(a, v);
    if (da < db) break;
    Polynomial la = coeff_in(a, v, static_cast<unsigned>(da));
    a = lb * a - shift_in(la, v, static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

}  // namespace detail

// Primitive gcd over Q[x1..xn] (unit-normalized, positive leading
// coefficient). gcd(p, 0) = unit_normalize(p); gcd of two nonzero constants
// is 1. Primitive pseudo-remainder sequences in the largest active variable.
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw InputError("polynomial variable-count mismatch");
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  unsigned v = 0;
  for (unsigned i = a.nvars(); i >= 1; --i) {
    if (detail::degree_in(a, i) > 0 || detail::degree_in(b, i) > 0) {
      v = i;
      break;
    }
  }
  if (v == 0) return Polynomial::constant(a.nvars(), Rational(1));

  auto content_in = [&](const Polynomial& p) {
    Polynomial c(p.nvars());
    int d = detail::degree_in(p, v);
    for (int e = 0; e <= d; ++e) {
      Polynomial ce = detail::coeff_in(p, v, static_cast<unsigned>(e));
      if (!ce.is_zero()) c = c.is_zero() ? unit_normalize(ce) : polynomial_gcd(c, ce);
    }
    return c;
  };

  Polynomial ca = content_in(a), cb = content_in(b);
  Polynomial pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  if (detail::degree_in(pa, v) < detail::degree_in(pb, v)) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    Polynomial r = detail::pseudo_rem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (detail::degree_in(r, v) == 0) {
      g = Polynomial::constant(a.nvars(), Rational(1));
      break;
    }
    pa = pb;
    Polynomial rc = content_in(r);
    pb = *divide_exact(r, rc);
  }
  Polynomial gc = content_in(g);
  g = *divide_exact(g, gc);
  return unit_normalize(g * polynomial_gcd(ca, cb));
}

}  // namespace liejets
