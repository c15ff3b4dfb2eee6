#pragma once

// Order-by-order extension of a first-order deformation of unimodular
// contact constants.
//
// A curve of constants c(t) = sum_nu t^nu/nu! c_nu stays inside the family
// exactly when the product c'(t) c''(t) vanishes identically.  Expanding
// that product turns the requirement into one scalar condition per t-power:
//
//   sum_{lambda} binom(nu, lambda) c'_lambda c''_{nu-lambda} = 0.
//
// The nu-th condition is linear in the unknown coefficient pair c_nu with a
// lower-order residual; whenever the base constants are nonzero the linear
// part is surjective and a solution can be chosen with the free slot set to
// zero.  At base (0, 0) the linear part vanishes, so a nonzero residual is a
// genuine obstruction and its t-power is reported.

#include <string>
#include <utility>
#include <vector>

#include "liejets/combinatorics.hpp"
#include "liejets/rational.hpp"
#include "liejets/vessiot/constants.hpp"

namespace liejets {

struct VessiotDeformationReport {
  bool extends = false;
  unsigned obstruction_order = 0;   // first unsolvable t-power; 0 when extends
  Rational obstruction_value;       // the residual at that power
  // Coefficient pairs (c'_nu, c''_nu) actually constructed, starting at nu=0.
  std::vector<std::pair<Rational, Rational>> coefficients;
};

inline VessiotDeformationReport vessiot_deformation_check(const VessiotConstants& base,
                                                          const VessiotConstants& direction,
                                                          unsigned order) {
  if (base.family() != StructureFamily::UnimodularContact ||
      direction.family() != StructureFamily::UnimodularContact)
    throw InputError("deformation extension is defined for unimodular_contact constants");

  Rational cp = base.c_prime(), cs = base.c_second();
  Rational prod = cp * cs;
  if (prod != 0) throw MathError("Jacobi violated: c'c'' = " + to_string(prod));

  Rational Cp = direction.c_prime(), Cs = direction.c_second();
  Rational linear = cs * Cp + cp * Cs;
  if (linear != 0)
    throw MathError("deformation direction is not a cocycle: c''C' + c'C'' = " +
                    to_string(linear));

  VessiotDeformationReport rep;
  rep.coefficients = {{cp, cs}, {Cp, Cs}};
  for (unsigned nu = 2; nu <= order; ++nu) {
    Rational residual(0);
    for (unsigned lam = 1; lam + 1 <= nu; ++lam)
      residual += Rational(binomial(nu, lam)) * rep.coefficients[lam].first *
                  rep.coefficients[nu - lam].second;
    if (cs != 0) {
      rep.coefficients.emplace_back(-residual / cs, Rational(0));
    } else if (cp != 0) {
      rep.coefficients.emplace_back(Rational(0), -residual / cp);
    } else if (residual == 0) {
      rep.coefficients.emplace_back(Rational(0), Rational(0));
    } else {
      rep.obstruction_order = nu;
      rep.obstruction_value = residual;
      return rep;
    }
  }
  rep.extends = true;
  return rep;
}

}  // namespace liejets
