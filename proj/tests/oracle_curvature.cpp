// Validates the reference curvature computation (first-kind Christoffel route)
// before any production curvature code relies on it. Three metrics with known
// geometry pin the values; randomized symmetric metrics pin the tensor
// symmetries that any correct curvature must satisfy.

#include <catch2/catch_amalgamated.hpp>

#include <liejets/matrix.hpp>
#include <liejets/rational_function.hpp>

#include <random>

#include "support/curvature_oracle.hpp"

using liejets::FMatrix;
using liejets::Rational;
using liejets::RationalFunction;

namespace {

RationalFunction rf(long v, std::size_t n) { return RationalFunction::constant(n, Rational(v)); }

FMatrix euclidean(std::size_t n) {
  FMatrix w(n, n, rf(0, n));
  for (std::size_t i = 0; i < n; ++i) w.at(i, i) = rf(1, n);
  return w;
}

// Degree caps keep the inverse-metric denominators small enough for exact
// arithmetic to stay quick; quadratic entries at n=2 still exercise the
// Christoffel-derivative terms, which drop out for linear entries.
FMatrix random_symmetric_metric(std::size_t n, unsigned max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (;;) {
    FMatrix w(n, n, rf(0, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        RationalFunction e = rf(coeff(rng), n);
        for (std::size_t v = 1; v <= n; ++v)
          e = e + rf(coeff(rng), n) * RationalFunction::variable(n, v);
        if (max_degree >= 2)
          e = e + rf(coeff(rng), n) * RationalFunction::variable(n, 1) *
                      RationalFunction::variable(n, 1);
        if (i == j) e = e + rf(3, n);
        w.at(i, j) = e;
        w.at(j, i) = e;
      }
    if (liejets::adjugate_inverse(w, rf(1, n))) return w;
  }
}

}  // namespace

TEST_CASE("flat metrics have zero curvature", "[curvature][oracle]") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto low = curvature_oracle::lowered_curvature(euclidean(n));
    for (const auto& entry : low.r) CHECK(entry.is_zero());
  }
}

TEST_CASE("polar-style metric diag(1, x1^2) is flat", "[curvature][oracle]") {
  const std::size_t n = 2;
  FMatrix w(n, n, rf(0, n));
  w.at(0, 0) = rf(1, n);
  w.at(1, 1) = RationalFunction::variable(n, 1) * RationalFunction::variable(n, 1);
  auto raised = curvature_oracle::raised_curvature(w);
  for (const auto& entry : raised) CHECK(entry.is_zero());
}

TEST_CASE("round conformal metric has constant curvature one", "[curvature][oracle]") {
  // w_ij = delta_ij / f^2 with f = 1 + (x1^2 + x2^2)/4: the stereographic
  // metric of the unit sphere. Expect R_{klij} = w_ki w_lj - w_kj w_li.
  const std::size_t n = 2;
  RationalFunction x = RationalFunction::variable(n, 1);
  RationalFunction y = RationalFunction::variable(n, 2);
  RationalFunction f = rf(1, n) + RationalFunction::constant(n, Rational(1, 4)) * (x * x + y * y);
  FMatrix w(n, n, rf(0, n));
  w.at(0, 0) = rf(1, n) / (f * f);
  w.at(1, 1) = w.at(0, 0);

  auto low = curvature_oracle::lowered_curvature(w);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          RationalFunction expect = w.at(k, i) * w.at(l, j) - w.at(k, j) * w.at(l, i);
          CHECK((low.at(k, l, i, j) - expect).is_zero());
        }

  // Raised form: R^k_{lij} = delta^k_i w_lj - delta^k_j w_li.
  auto raised = curvature_oracle::raised_curvature(w);
  auto at = [&](std::size_t k, std::size_t l, std::size_t i, std::size_t j) {
    return raised[((k * n + l) * n + i) * n + j];
  };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          RationalFunction expect = rf(0, n);
          if (k == i) expect = expect + w.at(l, j);
          if (k == j) expect = expect - w.at(l, i);
          CHECK((at(k, l, i, j) - expect).is_zero());
        }
}

TEST_CASE("curvature symmetries on random metrics", "[curvature][oracle]") {
  std::mt19937_64 rng(20260822);
  for (std::size_t n = 2; n <= 3; ++n) {
    const int trials = n == 2 ? 4 : 2;
    const unsigned max_degree = n == 2 ? 2 : 1;
    for (int t = 0; t < trials; ++t) {
      FMatrix w = random_symmetric_metric(n, max_degree, rng);
      auto low = curvature_oracle::lowered_curvature(w);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              // Antisymmetry in the derivative pair.
              CHECK((low.at(k, l, i, j) + low.at(k, l, j, i)).is_zero());
              // Antisymmetry in the lowered value pair.
              CHECK((low.at(k, l, i, j) + low.at(l, k, i, j)).is_zero());
              // First Bianchi identity.
              CHECK((low.at(k, l, i, j) + low.at(k, i, j, l) + low.at(k, j, l, i)).is_zero());
            }
    }
  }
}
