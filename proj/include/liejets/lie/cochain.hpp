#pragma once

#include <vector>

#include "liejets/combinatorics.hpp"
#include "liejets/lie/structure_constants.hpp"

namespace liejets {

// Alternating r-linear map V^r -> V on a p-dimensional space, stored by its
// components on increasing index tuples. Coordinate layout: lexicographic
// r-tuples outermost, then the p fiber components, matching the column
// convention of every differential matrix in this library.
class Cochain {
 public:
  Cochain(unsigned p, unsigned r)
      : p_(p), r_(r), tuples_(increasing_tuples(p, r)),
        comp_(tuples_.size() * p, Rational(0)) {
    if (p == 0) throw InputError("dimension must be positive");
  }

  static std::size_t dimension(unsigned p, unsigned r) {
    return static_cast<std::size_t>(binomial(p, r).convert_to<unsigned long>()) * p;
  }

  unsigned space_dim() const { return p_; }
  unsigned degree() const { return r_; }
  std::size_t coordinate_count() const { return comp_.size(); }
  const std::vector<std::vector<unsigned>>& index_tuples() const { return tuples_; }

  Rational& component(std::size_t tuple_idx, unsigned tau) {
    return comp_[tuple_idx * p_ + (tau - 1)];
  }
  const Rational& component(std::size_t tuple_idx, unsigned tau) const {
    return comp_[tuple_idx * p_ + (tau - 1)];
  }

  std::size_t tuple_index(const std::vector<unsigned>& tuple) const {
    for (std::size_t s = 0; s < tuples_.size(); ++s)
      if (tuples_[s] == tuple) return s;
    throw InputError("not an increasing index tuple");
  }

  void set(const std::vector<unsigned>& tuple, unsigned tau, const Rational& v) {
    component(tuple_index(tuple), tau) = v;
  }

  // Evaluate on basis vectors e_{args[0]}, ..., e_{args[r-1]} in any order;
  // repeated arguments give zero, otherwise the sorted component picks up
  // the sign of the sorting permutation.
  std::vector<Rational> evaluate(std::vector<unsigned> args) const {
    if (args.size() != r_) throw InputError("wrong number of arguments");
    int sign = 1;
    for (std::size_t a = 1; a < args.size(); ++a) {
      std::size_t b = a;
      while (b > 0 && args[b - 1] > args[b]) {
        std::swap(args[b - 1], args[b]);
        sign = -sign;
        --b;
      }
    }
    for (std::size_t a = 1; a < args.size(); ++a)
      if (args[a - 1] == args[a]) return std::vector<Rational>(p_, Rational(0));
    std::size_t s = tuple_index(args);
    std::vector<Rational> out(p_);
    for (unsigned tau = 1; tau <= p_; ++tau)
      out[tau - 1] = Rational(sign) * component(s, tau);
    return out;
  }

  // Bilinear extension for degree-2 cochains.
  std::vector<Rational> apply2(const std::vector<Rational>& x,
                               const std::vector<Rational>& y) const {
    if (r_ != 2) throw InputError("apply2 needs a degree-2 cochain");
    return to_constants().bracket(x, y);
  }

  StructureConstants to_constants() const {
    if (r_ != 2) throw InputError("only degree-2 cochains are bracket candidates");
    StructureConstants c(p_);
    for (std::size_t s = 0; s < tuples_.size(); ++s)
      for (unsigned tau = 1; tau <= p_; ++tau)
        c.set(tau, tuples_[s][0], tuples_[s][1], component(s, tau));
    return c;
  }

  static Cochain from_constants(const StructureConstants& c) {
    Cochain f(c.dim(), 2);
    for (std::size_t s = 0; s < f.tuples_.size(); ++s)
      for (unsigned tau = 1; tau <= c.dim(); ++tau)
        f.component(s, tau) = c.at(tau, f.tuples_[s][0], f.tuples_[s][1]);
    return f;
  }

  const std::vector<Rational>& coordinates() const { return comp_; }

  static Cochain from_coordinates(unsigned p, unsigned r, const std::vector<Rational>& v) {
    Cochain f(p, r);
    if (v.size() != f.comp_.size()) throw InputError("coordinate vector has wrong length");
    f.comp_ = v;
    return f;
  }

  bool is_zero() const {
    for (const Rational& v : comp_)
      if (v != 0) return false;
    return true;
  }

  Cochain& operator+=(const Cochain& o) {
    check_shape(o);
    for (std::size_t t = 0; t < comp_.size(); ++t) comp_[t] += o.comp_[t];
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_shape(o);
    for (std::size_t t = 0; t < comp_.size(); ++t) comp_[t] -= o.comp_[t];
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Cochain& a, const Rational& s) {
    Cochain r = a;
    for (Rational& v : r.comp_) v *= s;
    return r;
  }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.comp_ == b.comp_;
  }

 private:
  void check_shape(const Cochain& o) const {
    if (p_ != o.p_ || r_ != o.r_) throw InputError("cochain shape mismatch");
  }

  unsigned p_, r_;
  std::vector<std::vector<unsigned>> tuples_;
  std::vector<Rational> comp_;
};

}  // namespace liejets
