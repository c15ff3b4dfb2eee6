#pragma once

#include <utility>
#include <vector>

#include "liejets/polynomial.hpp"

namespace liejets {

// Rational function p/q over Q(x1..xn), kept in a canonical reduced form:
// gcd(p, q) = 1 and q is unit-normalized (coprime integer coefficients,
// positive leading graded-lex coefficient). Equality is componentwise.
class RationalFunction {
 public:
  explicit RationalFunction(unsigned nvars = 0)
      : num_(nvars), den_(Polynomial::constant(nvars, Rational(1))) {}

  RationalFunction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
      throw InputError("rational function variable-count mismatch");
    reduce();
  }

  static RationalFunction constant(unsigned nvars, const Rational& c) {
    RationalFunction f(nvars);
    f.num_ = Polynomial::constant(nvars, c);
    return f;
  }

  static RationalFunction variable(unsigned nvars, unsigned i) {
    RationalFunction f(nvars);
    f.num_ = Polynomial::variable(nvars, i);
    return f;
  }

  static RationalFunction from(Polynomial p) {
    RationalFunction f(p.nvars());
    f.num_ = std::move(p);
    return f;
  }

  unsigned nvars() const { return num_.nvars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Rational constant_value() const {
    if (!is_constant()) throw MathError("rational function is not constant");
    return num_.constant_value() / den_.constant_value();
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw MathError("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
    RationalFunction r = a;
    r.num_ = r.num_ * s;
    if (s == 0) r.den_ = Polynomial::constant(a.nvars(), Rational(1));
    return r;
  }
  friend RationalFunction operator*(const Rational& s, const RationalFunction& a) {
    return a * s;
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Quotient rule; result is reduced again.
  RationalFunction derivative(unsigned i) const {
    return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i),
                            den_ * den_);
  }

  // Throws MathError when the denominator vanishes at the point.
  Rational eval(const std::vector<Rational>& p) const {
    Rational d = den_.eval(p);
    if (d == 0) throw MathError("rational function pole at evaluation point");
    return num_.eval(p) / d;
  }

  bool defined_at(const std::vector<Rational>& p) const { return den_.eval(p) != 0; }

 private:
  void reduce() {
    if (den_.is_zero()) throw MathError("zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial::constant(num_.nvars(), Rational(1));
      return;
    }
    if (den_.is_constant()) {
      Rational dc = den_.constant_value();
      den_ = Polynomial::constant(den_.nvars(), Rational(1));
      num_ = num_ * Polynomial::constant(num_.nvars(), Rational(1) / dc);
      return;
    }
    Polynomial g = polynomial_gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    Rational dc = polynomial_content(den_);
    den_ = *divide_exact(den_, Polynomial::constant(den_.nvars(), dc));
    num_ = *divide_exact(num_, Polynomial::constant(num_.nvars(), dc));
  }

  Polynomial num_, den_;
};

}  // namespace liejets
