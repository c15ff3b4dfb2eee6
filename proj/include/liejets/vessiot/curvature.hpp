#pragma once

#include <cstddef>
#include <vector>

#include "liejets/matrix.hpp"
#include "liejets/rational_function.hpp"
#include "liejets/vessiot/object.hpp"

namespace liejets {

// Christoffel symbols of a metric: gamma^k_ij, symmetric in (i, j). Stored
// flat as (k*n + i)*n + j with 0-based indices.
struct ChristoffelField {
  unsigned n = 0;
  std::vector<RationalFunction> gamma;

  const RationalFunction& at(unsigned k, unsigned i, unsigned j) const {
    return gamma[(static_cast<std::size_t>(k) * n + i) * n + j];
  }
};

// Curvature rho^k_lij of a Christoffel field, flat layout ((k*n+l)*n+i)*n+j.
struct CurvatureField {
  unsigned n = 0;
  std::vector<RationalFunction> rho;

  const RationalFunction& at(unsigned k, unsigned l, unsigned i, unsigned j) const {
    return rho[((static_cast<std::size_t>(k) * n + l) * n + i) * n + j];
  }
};

// gamma^k_ij = (1/2) w^kr (d_i w_rj + d_j w_ri - d_r w_ij).
inline ChristoffelField christoffel(const GeometricObject& obj) {
  if (obj.family() != StructureFamily::Metric)
    throw InputError("christoffel symbols need a metric object");
  const unsigned n = obj.base_dim();
  const FMatrix& w = obj.matrix();
  auto winv = adjugate_inverse(w, RationalFunction::constant(n, 1));
  if (!winv) throw MathError("singular metric");
  ChristoffelField out;
  out.n = n;
  out.gamma.assign(static_cast<std::size_t>(n) * n * n, RationalFunction::constant(n, 0));
  const RationalFunction half = RationalFunction::constant(n, Rational(1, 2));
  for (unsigned k = 0; k < n; ++k)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) {
        RationalFunction v = RationalFunction::constant(n, 0);
        for (unsigned r = 0; r < n; ++r)
          v = v + winv->at(k, r) * (w.at(r, j).derivative(i + 1) +
                                    w.at(r, i).derivative(j + 1) -
                                    w.at(i, j).derivative(r + 1));
        v = half * v;
        out.gamma[(static_cast<std::size_t>(k) * n + i) * n + j] = v;
        out.gamma[(static_cast<std::size_t>(k) * n + j) * n + i] = v;
      }
  return out;
}

// rho^k_lij = d_i gamma^k_lj - d_j gamma^k_li
//           + gamma^r_lj gamma^k_ri - gamma^r_li gamma^k_rj.
inline CurvatureField riemann(const ChristoffelField& g) {
  const unsigned n = g.n;
  CurvatureField out;
  out.n = n;
  out.rho.assign(static_cast<std::size_t>(n) * n * n * n, RationalFunction::constant(n, 0));
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = 0; l < n; ++l)
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
          RationalFunction v =
              g.at(k, l, j).derivative(i + 1) - g.at(k, l, i).derivative(j + 1);
          for (unsigned r = 0; r < n; ++r)
            v = v + g.at(r, l, j) * g.at(k, r, i) - g.at(r, l, i) * g.at(k, r, j);
          out.rho[((static_cast<std::size_t>(k) * n + l) * n + i) * n + j] = v;
        }
  return out;
}

// Count of independent components a curvature tensor has once all its
// symmetries are imposed.
inline std::size_t curvature_component_count(unsigned n) {
  std::size_t n2 = static_cast<std::size_t>(n) * n;
  return n2 * (n2 - 1) / 12;
}

// Verifies the symmetry identities as rational-function identities:
// antisymmetry in (i, j), the cyclic first Bianchi sum, and antisymmetry of
// the lowered value pair. Throws MathError naming the first failure.
inline void require_curvature_identities(const GeometricObject& metric,
                                         const CurvatureField& rho) {
  const unsigned n = rho.n;
  const FMatrix& w = metric.matrix();
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = 0; l < n; ++l)
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
          if (!(rho.at(k, l, i, j) + rho.at(k, l, j, i)).is_zero())
            throw MathError("curvature fails antisymmetry in the derivative pair");
          if (!(rho.at(k, l, i, j) + rho.at(k, i, j, l) + rho.at(k, j, l, i)).is_zero())
            throw MathError("curvature fails the first Bianchi identity");
          RationalFunction lowered = RationalFunction::constant(n, 0);
          for (unsigned r = 0; r < n; ++r)
            lowered = lowered + w.at(r, l) * rho.at(r, k, i, j) + w.at(k, r) * rho.at(r, l, i, j);
          if (!lowered.is_zero())
            throw MathError("curvature fails antisymmetry of the lowered pair");
        }
}

}  // namespace liejets
