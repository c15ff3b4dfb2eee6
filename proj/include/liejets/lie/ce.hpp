#pragma once

#include <vector>

#include "liejets/lie/cochain.hpp"
#include "liejets/matrix.hpp"

namespace liejets {

namespace detail {

// Shared evaluator, no Jacobi gate: the deformation machinery needs the same
// alternating-sum formula around bracket candidates that are not yet Lie.
inline Cochain coboundary_formula(const StructureConstants& c, const Cochain& f) {
  unsigned p = c.dim(), r = f.degree();
  Cochain df(p, r + 1);
  const auto& big = df.index_tuples();
  for (std::size_t ti = 0; ti < big.size(); ++ti) {
    const std::vector<unsigned>& T = big[ti];
    std::vector<Rational> value(p, Rational(0));
    for (unsigned a = 0; a < T.size(); ++a) {
      for (unsigned b = a + 1; b < T.size(); ++b) {
        int outer = (a + b) % 2 == 0 ? 1 : -1;  // (-1)^{(a+1)+(b+1)}
        std::vector<Rational> w = c.bracket_basis(T[a], T[b]);
        std::vector<unsigned> rest;
        for (unsigned t = 0; t < T.size(); ++t)
          if (t != a && t != b) rest.push_back(T[t]);
        for (unsigned m = 1; m <= p; ++m) {
          if (w[m - 1] == 0) continue;
          std::vector<unsigned> args;
          args.push_back(m);
          args.insert(args.end(), rest.begin(), rest.end());
          std::vector<Rational> fv = f.evaluate(std::move(args));
          for (unsigned tau = 1; tau <= p; ++tau)
            value[tau - 1] += Rational(outer) * w[m - 1] * fv[tau - 1];
        }
      }
    }
    for (unsigned a = 0; a < T.size(); ++a) {
      int outer = a % 2 == 0 ? 1 : -1;  // (-1)^{(a+1)+1}
      std::vector<unsigned> rest;
      for (unsigned t = 0; t < T.size(); ++t)
        if (t != a) rest.push_back(T[t]);
      std::vector<Rational> fv = f.evaluate(std::move(rest));
      for (unsigned tau = 1; tau <= p; ++tau)
        for (unsigned m = 1; m <= p; ++m)
          value[tau - 1] += Rational(outer) * c.at(tau, T[a], m) * fv[m - 1];
    }
    for (unsigned tau = 1; tau <= p; ++tau) df.component(ti, tau) = value[tau - 1];
  }
  return df;
}

}  // namespace detail

inline Cochain ce_differential(const StructureConstants& c, const Cochain& f) {
  if (c.dim() != f.space_dim()) throw InputError("dimension mismatch");
  c.require_jacobi();
  return detail::coboundary_formula(c, f);
}

inline QMatrix ce_differential_matrix(const StructureConstants& c, unsigned r) {
  c.require_jacobi();
  unsigned p = c.dim();
  std::size_t cols = Cochain::dimension(p, r);
  std::size_t rows = r + 1 <= p ? Cochain::dimension(p, r + 1) : 0;
  QMatrix m = make_qmatrix(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rational> unit(cols, Rational(0));
    unit[j] = 1;
    Cochain df = detail::coboundary_formula(c, Cochain::from_coordinates(p, r, unit));
    const std::vector<Rational>& coords = df.coordinates();
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

struct CohomologyReport {
  unsigned degree;
  std::size_t cochain_dim, cocycle_dim, coboundary_dim, cohomology_dim;
};

inline CohomologyReport cohomology(const StructureConstants& c, unsigned r) {
  if (r > c.dim()) throw InputError("degree exceeds the top of the complex");
  std::size_t dim = Cochain::dimension(c.dim(), r);
  std::size_t out_rank = r < c.dim() ? ce_differential_matrix(c, r).rank() : 0;
  std::size_t in_rank = r > 0 ? ce_differential_matrix(c, r - 1).rank() : 0;
  return CohomologyReport{r, dim, dim - out_rank, in_rank, dim - out_rank - in_rank};
}

inline std::vector<Cochain> derivations(const StructureConstants& c) {
  QMatrix d1 = ce_differential_matrix(c, 1);
  std::vector<Cochain> out;
  for (const auto& v : d1.kernel_basis(Rational(1)))
    out.push_back(Cochain::from_coordinates(c.dim(), 1, v));
  return out;
}

inline std::vector<Cochain> inner_derivations(const StructureConstants& c) {
  QMatrix d0 = ce_differential_matrix(c, 0);
  auto e = d0.rref();
  std::vector<Cochain> out;
  for (std::size_t pc : e.pivots) {
    std::vector<Rational> col(d0.rows());
    for (std::size_t i = 0; i < d0.rows(); ++i) col[i] = d0.at(i, pc);
    out.push_back(Cochain::from_coordinates(c.dim(), 1, col));
  }
  return out;
}

struct RigidityReport {
  std::size_t h0, h1, h2;
  bool certified_rigid;
};

// Vanishing second cohomology certifies rigidity; the converse is open, so
// a nonzero H2 only reports "inconclusive" downstream.
inline RigidityReport is_rigid_sufficient(const StructureConstants& c) {
  RigidityReport r{};
  r.h0 = cohomology(c, 0).cohomology_dim;
  r.h1 = c.dim() >= 1 ? cohomology(c, 1).cohomology_dim : 0;
  r.h2 = c.dim() >= 2 ? cohomology(c, 2).cohomology_dim : 0;
  r.certified_rigid = r.h2 == 0;
  return r;
}

}  // namespace liejets
