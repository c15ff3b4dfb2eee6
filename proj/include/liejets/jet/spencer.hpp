#pragma once

#include <optional>
#include <vector>

#include "liejets/combinatorics.hpp"
#include "liejets/jet/section.hpp"
#include "liejets/matrix.hpp"

namespace liejets {

// First-order defect between a jet section and the jet of its own
// projection: (Df)^k_{mu,i} = d_i f^k_mu - f^k_{mu+1_i}. The result is a
// 1-form with values in the order-q bundle, returned as its n components.
inline std::vector<JetSection> spencer_operator(const JetSection& f) {
  if (f.order() == 0) throw InputError("the Spencer operator needs order at least 1");
  unsigned n = f.base_dim(), m = f.fiber_dim(), q = f.order() - 1;
  std::vector<JetSection> out;
  for (unsigned i = 1; i <= n; ++i) {
    JetSection comp(n, m, q);
    for (unsigned k = 1; k <= m; ++k)
      for (const MultiIndex& mu : comp.layout().indices())
        comp.set(k, mu, f.at(k, mu).derivative(i) - f.at(k, bump(mu, i)));
    out.push_back(comp);
  }
  return out;
}

// Contraction i(zeta)Df of the 1-form part with a vector field on the base.
inline JetSection spencer_contract(const std::vector<RationalFunction>& zeta,
                                   const JetSection& f) {
  std::vector<JetSection> d = spencer_operator(f);
  if (zeta.size() != d.size()) throw InputError("contraction vector has wrong length");
  JetSection out(f.base_dim(), f.fiber_dim(), f.order() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) out += zeta[i] * d[i];
  return out;
}

// Coordinate layout for Lambda^s T* tensor S_o T* tensor E: wedge factor
// outermost, then the symbol monomial, then the fiber component.
class WedgeSymbolLayout {
 public:
  WedgeSymbolLayout(unsigned n, unsigned m, unsigned o, unsigned s)
      : tuples_(increasing_tuples(n, s)), sym_(n, m, o) {}

  std::size_t coordinate_count() const { return tuples_.size() * sym_.coordinate_count(); }
  const std::vector<std::vector<unsigned>>& wedge_tuples() const { return tuples_; }
  const SymbolLayout& symbol() const { return sym_; }

  std::size_t coordinate(std::size_t tuple_idx, const MultiIndex& mu, unsigned k) const {
    return tuple_idx * sym_.coordinate_count() + sym_.coordinate(mu, k);
  }

 private:
  std::vector<std::vector<unsigned>> tuples_;
  SymbolLayout sym_;
};

// Matrix of delta: Lambda^s T* (x) S_{o+1} T* (x) E -> Lambda^{s+1} T* (x) S_o T* (x) E,
//   (delta w)^k_{mu,J} = sum_t (-1)^{t-1} w^k_{mu+1_{j_t}, J minus j_t},
// J ascending, t the 1-based position of the removed entry.
inline QMatrix spencer_delta_matrix(unsigned n, unsigned m, unsigned o, unsigned s) {
  if (s >= n) throw InputError("wedge degree must stay below the base dimension");
  WedgeSymbolLayout src(n, m, o + 1, s);
  WedgeSymbolLayout dst(n, m, o, s + 1);
  QMatrix M = make_qmatrix(dst.coordinate_count(), src.coordinate_count());

  const auto& dst_tuples = dst.wedge_tuples();
  for (std::size_t J = 0; J < dst_tuples.size(); ++J) {
    const auto& tup = dst_tuples[J];
    for (std::size_t t = 0; t < tup.size(); ++t) {
      std::vector<unsigned> rest;
      for (std::size_t u = 0; u < tup.size(); ++u)
        if (u != t) rest.push_back(tup[u]);
      // position of the reduced tuple among the source wedge factors
      std::size_t Jsrc = 0;
      while (src.wedge_tuples()[Jsrc] != rest) ++Jsrc;
      Rational sign = (t % 2 == 0) ? Rational(1) : Rational(-1);
      for (const MultiIndex& mu : dst.symbol().indices()) {
        MultiIndex nu = bump(mu, tup[t]);
        for (unsigned k = 1; k <= m; ++k)
          M.at(dst.coordinate(J, mu, k), src.coordinate(Jsrc, nu, k)) += sign;
      }
    }
  }
  return M;
}

// A symbol grade: subspace of S_order T* (x) E given by spanning vectors in
// the frozen symbol coordinates.
struct SymbolSpace {
  unsigned n = 0, m = 0, order = 0;
  std::vector<std::vector<Rational>> basis;

  std::size_t dim() const { return basis.size(); }
};

inline SymbolSpace full_symbol_space(unsigned n, unsigned m, unsigned o) {
  SymbolSpace g{n, m, o, {}};
  std::size_t d = monomial_count(n, o) * m;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> e(d, Rational(0));
    e[i] = 1;
    g.basis.push_back(e);
  }
  return g;
}

struct DeltaSpot {
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  std::size_t homology_dim = 0;
};

namespace detail {

// columns of the inclusion Lambda^s (x) span(basis) -> Lambda^s (x) S_o (x) E
inline QMatrix wedge_span_matrix(const SymbolSpace& g, unsigned s) {
  WedgeSymbolLayout full(g.n, g.m, g.order, s);
  std::size_t tuples = full.wedge_tuples().size();
  std::size_t block = full.symbol().coordinate_count();
  QMatrix M = make_qmatrix(tuples * block, tuples * g.dim());
  for (std::size_t J = 0; J < tuples; ++J)
    for (std::size_t b = 0; b < g.dim(); ++b)
      for (std::size_t r = 0; r < block; ++r)
        M.at(J * block + r, J * g.dim() + b) = g.basis[b][r];
  return M;
}

}  // namespace detail

// Homology of the delta complex at Lambda^s (x) here, with the neighbouring
// grades supplied by the caller (full spaces below the system order, kernels
// of symbol matrices at and above it). below may be omitted at order 0.
inline DeltaSpot delta_cohomology_at(const SymbolSpace& above, const SymbolSpace& here,
                                     const std::optional<SymbolSpace>& below, unsigned s) {
  if (here.n != above.n || here.m != above.m || above.order != here.order + 1)
    throw InputError("neighbouring symbol grades do not line up");
  if (here.order > 0) {
    if (!below || below->n != here.n || below->m != here.m ||
        below->order + 1 != here.order)
      throw InputError("missing or misaligned grade below");
  }
  unsigned n = here.n, m = here.m;
  if (s > n) throw InputError("wedge degree exceeds the base dimension");

  std::size_t here_dim = increasing_tuples(n, s).size() * here.dim();

  // incoming images, written in the ambient coordinates of Lambda^s (x) S (x) E
  std::size_t rank_in = 0;
  if (s >= 1 && above.dim() > 0) {
    QMatrix d_in = spencer_delta_matrix(n, m, here.order, s - 1);
    QMatrix src = detail::wedge_span_matrix(above, s - 1);
    QMatrix images = d_in * src;
    rank_in = images.rank();
    // the tower is usable only if these images stay inside Lambda^s (x) here
    QMatrix span = detail::wedge_span_matrix(here, s);
    for (std::size_t c = 0; c < images.cols(); ++c) {
      std::vector<Rational> v(images.rows());
      for (std::size_t r = 0; r < images.rows(); ++r) v[r] = images.at(r, c);
      if (!span.column_span_contains(v))
        throw MathError("inconsistent symbol tower: delta image leaves the next grade");
    }
  }

  // outgoing rank; the map is zero off the top of the wedge or the bottom
  // of the symbol tower
  std::size_t rank_out = 0;
  if (s < n && here.order > 0 && here.dim() > 0) {
    QMatrix d_out = spencer_delta_matrix(n, m, here.order - 1, s);
    QMatrix restricted = d_out * detail::wedge_span_matrix(here, s);
    rank_out = restricted.rank();
  }

  std::size_t kernel = here_dim - rank_out;
  if (rank_in > kernel)
    throw MathError("inconsistent symbol tower: delta fails to square to zero");
  return DeltaSpot{kernel, rank_in, kernel - rank_in};
}

}  // namespace liejets
