#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liejets/expr.hpp"
#include "liejets/jet/bracket.hpp"

using namespace liejets;

namespace {

RationalFunction rf(const char* s, unsigned n) { return parse_expression(s, n); }

std::vector<RationalFunction> classical_bracket(const std::vector<RationalFunction>& X,
                                                const std::vector<RationalFunction>& Y) {
  unsigned n = static_cast<unsigned>(X.size());
  std::vector<RationalFunction> out;
  for (unsigned k = 1; k <= n; ++k) {
    RationalFunction acc = RationalFunction::constant(n, Rational(0));
    for (unsigned r = 1; r <= n; ++r)
      acc = acc + X[r - 1] * Y[k - 1].derivative(r) - Y[r - 1] * X[k - 1].derivative(r);
    out.push_back(acc);
  }
  return out;
}

JetSection random_field_jet(unsigned n, unsigned q, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  JetSection f(n, n, q);
  for (unsigned k = 1; k <= n; ++k)
    for (const MultiIndex& mu : f.layout().indices()) {
      Polynomial p = Polynomial::constant(n, Rational(coeff(rng)));
      for (unsigned i = 1; i <= n; ++i)
        p = p + Polynomial::variable(n, i) * Polynomial::constant(n, Rational(coeff(rng)));
      f.set(k, mu, RationalFunction::from(p));
    }
  return f;
}

std::vector<RationalFunction> random_field(unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<RationalFunction> X;
  for (unsigned k = 0; k < n; ++k) {
    Polynomial p = Polynomial::constant(n, Rational(coeff(rng)));
    for (unsigned i = 1; i <= n; ++i) {
      p = p + Polynomial::variable(n, i) * Polynomial::constant(n, Rational(coeff(rng)));
      p = p + Polynomial::variable(n, i) * Polynomial::variable(n, 1) *
                  Polynomial::constant(n, Rational(coeff(rng)));
    }
    X.push_back(RationalFunction::from(p));
  }
  return X;
}

}  // namespace

TEST_CASE("pointwise bracket shape checks") {
  JetSection notfield(2, 1, 1);
  CHECK_THROWS_AS(algebraic_bracket(notfield, notfield), InputError);
  JetSection flat(2, 2, 0);
  CHECK_THROWS_AS(algebraic_bracket(flat, flat), InputError);
  JetSection a(2, 2, 1), b(2, 2, 2);
  CHECK_THROWS_AS(algebraic_bracket(a, b), InputError);
}

TEST_CASE("pointwise bracket is antisymmetric") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    JetSection xi = random_field_jet(2, 2, rng);
    JetSection eta = random_field_jet(2, 2, rng);
    JetSection lhs = algebraic_bracket(xi, eta);
    JetSection rhs = algebraic_bracket(eta, xi) * Rational(-1);
    CHECK(lhs == rhs);
    CHECK(algebraic_bracket(xi, xi).is_zero());
  }
}

TEST_CASE("base component of the pointwise bracket") {
  std::mt19937_64 rng(99);
  JetSection xi = random_field_jet(2, 1, rng);
  JetSection eta = random_field_jet(2, 1, rng);
  JetSection br = algebraic_bracket(xi, eta);
  MultiIndex zero{0, 0};
  for (unsigned k = 1; k <= 2; ++k) {
    RationalFunction expect = RationalFunction::constant(2, Rational(0));
    for (unsigned r = 1; r <= 2; ++r)
      expect = expect + xi.at(r, zero) * eta.at(k, bump(zero, r)) -
               eta.at(r, zero) * xi.at(k, bump(zero, r));
    CHECK(br.at(k, zero) == expect);
  }
}

TEST_CASE("pointwise bracket of holonomic jets is the jet of the bracket") {
  std::vector<RationalFunction> X = {rf("0", 2), rf("x1", 2)};
  std::vector<RationalFunction> Y = {rf("1", 2), rf("0", 2)};
  JetSection got = algebraic_bracket(JetSection::jet_of(X, 2, 2), JetSection::jet_of(Y, 2, 2));
  CHECK(got == JetSection::jet_of({rf("0", 2), rf("-1", 2)}, 2, 1));

  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<RationalFunction> A = random_field(2, rng);
    std::vector<RationalFunction> B = random_field(2, rng);
    for (unsigned q = 1; q <= 3; ++q) {
      JetSection got2 =
          algebraic_bracket(JetSection::jet_of(A, 2, q), JetSection::jet_of(B, 2, q));
      CHECK(got2 == JetSection::jet_of(classical_bracket(A, B), 2, q - 1));
    }
  }
}

TEST_CASE("first-order section bracket in closed form") {
  std::mt19937_64 rng(314);
  JetSection xi = random_field_jet(2, 1, rng);
  JetSection eta = random_field_jet(2, 1, rng);
  JetSection br = differential_bracket(xi, eta);
  MultiIndex zero{0, 0};

  for (unsigned k = 1; k <= 2; ++k) {
    RationalFunction base = RationalFunction::constant(2, Rational(0));
    for (unsigned r = 1; r <= 2; ++r)
      base = base + xi.at(r, zero) * eta.at(k, zero).derivative(r) -
             eta.at(r, zero) * xi.at(k, zero).derivative(r);
    CHECK(br.at(k, zero) == base);

    for (unsigned i = 1; i <= 2; ++i) {
      RationalFunction c = RationalFunction::constant(2, Rational(0));
      for (unsigned r = 1; r <= 2; ++r)
        c = c + xi.at(r, zero) * eta.at(k, bump(zero, i)).derivative(r) +
            xi.at(r, bump(zero, i)) * eta.at(k, bump(zero, r)) -
            eta.at(r, bump(zero, i)) * xi.at(k, bump(zero, r)) -
            eta.at(r, zero) * xi.at(k, bump(zero, i)).derivative(r);
      CHECK(br.at(k, bump(zero, i)) == c);
    }
  }
}

TEST_CASE("section bracket does not depend on the chosen lifts") {
  std::mt19937_64 rng(8675309);
  for (int trial = 0; trial < 4; ++trial) {
    JetSection xi = random_field_jet(2, 1, rng);
    JetSection eta = random_field_jet(2, 1, rng);
    JetSection lift_xi = xi.lift_zero(2);
    JetSection lift_eta = eta.lift_zero(2);
    SymbolLayout top(2, 2, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (unsigned k = 1; k <= 2; ++k)
      for (const MultiIndex& mu : top.indices()) {
        lift_xi.set(k, mu, rf("x1*x2", 2) * RationalFunction::constant(2, Rational(coeff(rng))));
        lift_eta.set(k, mu, rf("x2^2", 2) * RationalFunction::constant(2, Rational(coeff(rng))));
      }
    JetSection with_lifts = differential_bracket(xi, eta, lift_xi, lift_eta);
    CHECK(with_lifts == differential_bracket(xi, eta));
  }

  JetSection xi = random_field_jet(2, 1, rng);
  JetSection bad = random_field_jet(2, 2, rng);
  CHECK_THROWS_AS(differential_bracket(xi, xi, bad, xi.lift_zero(2)), InputError);
  CHECK_THROWS_AS(differential_bracket(xi, xi, xi.lift_zero(3), xi.lift_zero(2)),
                  InputError);
}

TEST_CASE("section bracket restricts to the classical bracket on holonomic jets") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<RationalFunction> X = random_field(2, rng);
    std::vector<RationalFunction> Y = random_field(2, rng);
    for (unsigned q = 1; q <= 2; ++q) {
      JetSection got = differential_bracket(JetSection::jet_of(X, 2, q),
                                            JetSection::jet_of(Y, 2, q));
      CHECK(got == JetSection::jet_of(classical_bracket(X, Y), 2, q));
    }
  }
}

TEST_CASE("first jet acts on plain vector fields") {
  std::mt19937_64 rng(777);
  std::vector<RationalFunction> X = random_field(2, rng);
  std::vector<RationalFunction> Z = random_field(2, rng);
  auto got = field_lie_derivative(JetSection::jet_of(X, 2, 1), Z);
  auto expect = classical_bracket(X, Z);
  REQUIRE(got.size() == expect.size());
  for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == expect[k]);

  // rotation jet moving the coordinate fields into each other
  JetSection rot(2, 2, 1);
  rot.set(1, {0, 1}, rf("-1", 2));
  rot.set(2, {1, 0}, rf("1", 2));
  auto turned = field_lie_derivative(rot, {rf("1", 2), rf("0", 2)});
  CHECK(turned[0] == rf("0", 2));
  CHECK(turned[1] == rf("-1", 2));
}

TEST_CASE("transport along a holonomic jet is the jet of the bracket") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<RationalFunction> X = random_field(2, rng);
    std::vector<RationalFunction> Y = random_field(2, rng);
    for (unsigned q = 1; q <= 2; ++q) {
      JetSection got = formal_lie_derivative(JetSection::jet_of(X, 2, q + 1),
                                             JetSection::jet_of(Y, 2, q));
      CHECK(got == JetSection::jet_of(classical_bracket(X, Y), 2, q));
    }
  }
}

TEST_CASE("transport satisfies the Leibniz rule over functions") {
  std::mt19937_64 rng(31337);
  JetSection xi_top = random_field_jet(2, 2, rng);
  JetSection eta = random_field_jet(2, 1, rng);
  RationalFunction f = rf("x1^2 - x2", 2);

  JetSection lhs = formal_lie_derivative(xi_top, f * eta);
  RationalFunction xf = RationalFunction::constant(2, Rational(0));
  auto base = xi_top.base_components();
  for (unsigned r = 1; r <= 2; ++r) xf = xf + base[r - 1] * f.derivative(r);
  JetSection rhs = f * formal_lie_derivative(xi_top, eta) + xf * eta;
  CHECK(lhs == rhs);
}

TEST_CASE("transports along holonomic jets compose like the fields") {
  std::mt19937_64 rng(90210);
  std::vector<RationalFunction> X = random_field(2, rng);
  std::vector<RationalFunction> Y = random_field(2, rng);
  JetSection zeta = random_field_jet(2, 1, rng);

  JetSection lhs = formal_lie_derivative(JetSection::jet_of(X, 2, 2),
                                         formal_lie_derivative(JetSection::jet_of(Y, 2, 2), zeta)) -
                   formal_lie_derivative(JetSection::jet_of(Y, 2, 2),
                                         formal_lie_derivative(JetSection::jet_of(X, 2, 2), zeta));
  JetSection rhs = formal_lie_derivative(JetSection::jet_of(classical_bracket(X, Y), 2, 2), zeta);
  CHECK(lhs == rhs);
}
