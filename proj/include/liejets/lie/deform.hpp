#pragma once

#include <optional>
#include <vector>

#include "liejets/lie/ce.hpp"

namespace liejets {

// Quadratic Jacobi map: a bracket candidate gamma goes to the degree-3
// cochain J(gamma)(x,y,z) = cyclic sum gamma(gamma(x,y),z). A table is a
// Lie bracket exactly when this vanishes.
inline Cochain jacobi_map(const StructureConstants& gamma) {
  unsigned p = gamma.dim();
  Cochain out(p, 3);
  const auto& tuples = out.index_tuples();
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    std::vector<Rational> d =
        gamma.jacobi_defect(tuples[s][0], tuples[s][1], tuples[s][2]);
    for (unsigned tau = 1; tau <= p; ++tau) out.component(s, tau) = d[tau - 1];
  }
  return out;
}

// Symmetric bilinear polarization of the Jacobi map:
//   B(a, b) = J(a + b) - J(a) - J(b),
// so B(g, g) = 2 J(g). When c is an honest Lie bracket, B(c, C) is exactly
// minus the coboundary of C in the complex of c; expanding both cyclic sums
// term by term shows every summand flips sign.
inline Cochain jacobi_polar(const StructureConstants& a, const StructureConstants& b) {
  return jacobi_map(a + b) - jacobi_map(a) - jacobi_map(b);
}

// Second derivative of J at c in the direction C. J is quadratic, so the
// Hessian does not depend on the base point; the t^2 coefficient of
// J(c + tC) is J(C) and the Hessian pairing is twice that.
inline Cochain hessian_obstruction(const StructureConstants& c, const Cochain& C) {
  c.require_jacobi();
  if (!ce_differential(c, C).is_zero())
    throw MathError("direction is not a cocycle");
  return jacobi_map(C.to_constants()) * Rational(2);
}

// Formal curve of bracket candidates through c. Coefficients follow the
// divided-power convention: the curve is c(t) = c + sum_{v>=1} (t^v / v!) C_v,
// which keeps the order-v extension condition in the clean integer form
//   d C_{v+1} = (1/2) sum_{l+m=v+1; l,m>=1} (v+1)!/(l! m!) B(C_l, C_m),
// the linear term entering through B(c, C_{v+1}) = -d C_{v+1}.
struct DeformationSeries {
  StructureConstants base;
  std::vector<Cochain> coeffs;  // C_1 .. C_N

  unsigned order() const { return static_cast<unsigned>(coeffs.size()); }
};

// Plain Taylor coefficients of J along the curve, indices 0..order. The
// curve is polynomial in t, so coefficients past twice the series order are
// identically zero; asking for them is allowed and returns zero cochains.
inline std::vector<Cochain> deformation_residual(const DeformationSeries& s, unsigned order) {
  unsigned p = s.base.dim();
  std::vector<StructureConstants> gamma;  // plain coefficients of the curve
  gamma.push_back(s.base);
  for (unsigned v = 1; v <= s.order(); ++v)
    gamma.push_back(s.coeffs[v - 1].to_constants() * Rational(Integer(1), factorial(v)));
  std::vector<Cochain> out;
  for (unsigned v = 0; v <= order; ++v) {
    Cochain r(p, 3);
    for (unsigned l = 0; 2 * l <= v; ++l) {
      unsigned m = v - l;
      if (m > s.order()) continue;
      if (l == m)
        r += jacobi_map(gamma[l]);
      else
        r += jacobi_polar(gamma[l], gamma[m]);
    }
    out.push_back(r);
  }
  return out;
}

struct ExtensionResult {
  bool extended;
  DeformationSeries series;       // full on success, partial up to the block
  unsigned obstruction_order;     // 0 when extended
  std::optional<Cochain> witness; // the nonzero degree-3 class blocking the solve
  std::size_t step_freedom = 0;   // dim of cocycles: each solve is unique modulo these
};

// Order-by-order continuation of an infinitesimal deformation. Each step is
// one linear solve d C_{v+1} = (known quadratic terms in C_1..C_v); it
// succeeds precisely when the right side is a coboundary, and the first
// failure is reported with its class representative.
inline ExtensionResult extend_deformation(const StructureConstants& c, const Cochain& C1,
                                          unsigned target_order) {
  c.require_jacobi();
  if (target_order == 0) throw InputError("target order must be at least 1");
  if (!ce_differential(c, C1).is_zero())
    throw MathError("initial direction is not a cocycle");

  DeformationSeries s{c, {C1}};
  QMatrix d2 = ce_differential_matrix(c, 2);
  std::size_t freedom = d2.cols() - d2.rank();
  for (unsigned v = 1; v + 1 <= target_order; ++v) {
    // obstruction term: (1/2) sum_{l+m=v+1; l,m>=1} (v+1)!/(l! m!) B(C_l, C_m)
    Cochain rhs(c.dim(), 3);
    // collapsing the ordered sum: an unordered pair l < m carries the full
    // weight, the diagonal l = m carries w * J via B(C,C) = 2 J(C)
    for (unsigned l = 1; 2 * l <= v + 1; ++l) {
      unsigned m = v + 1 - l;
      Rational w(factorial(v + 1), factorial(l) * factorial(m));
      Cochain pair = l == m ? jacobi_map(s.coeffs[l - 1].to_constants())
                            : jacobi_polar(s.coeffs[l - 1].to_constants(),
                                           s.coeffs[m - 1].to_constants());
      rhs += pair * w;
    }
    auto sol = d2.solve(rhs.coordinates());
    if (!sol) return ExtensionResult{false, s, v, rhs, freedom};
    s.coeffs.push_back(Cochain::from_coordinates(c.dim(), 2, *sol));
  }
  return ExtensionResult{true, s, 0, std::nullopt, freedom};
}

}  // namespace liejets
