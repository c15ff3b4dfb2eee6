#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "liejets/combinatorics.hpp"
#include "liejets/rational.hpp"

namespace liejets {

// Exponent vector of a partial derivative, one entry per base variable.
using MultiIndex = std::vector<unsigned>;

inline unsigned index_length(const MultiIndex& mu) {
  unsigned s = 0;
  for (unsigned e : mu) s += e;
  return s;
}

// Smallest variable actually differentiated (1-based); 0 for the empty index.
// Equations are graded by this number when counting solved classes.
inline unsigned index_class(const MultiIndex& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != 0) return static_cast<unsigned>(i + 1);
  return 0;
}

inline MultiIndex bump(MultiIndex mu, unsigned i) {
  ++mu.at(i - 1);
  return mu;
}

inline bool contains_index(const MultiIndex& nu, const MultiIndex& lambda) {
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (lambda[i] > nu[i]) return false;
  return true;
}

inline MultiIndex index_difference(const MultiIndex& nu, const MultiIndex& lambda) {
  MultiIndex out(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) out[i] = nu[i] - lambda[i];
  return out;
}

// Product of per-coordinate binomial coefficients; the convolution weight
// that makes jets of products behave (Leibniz in jet coordinates).
inline Rational index_binomial(const MultiIndex& nu, const MultiIndex& lambda) {
  Integer prod(1);
  for (std::size_t i = 0; i < nu.size(); ++i) prod *= binomial(nu[i], lambda[i]);
  return Rational(prod);
}

inline Integer index_factorial(const MultiIndex& mu) {
  Integer prod(1);
  for (unsigned e : mu) prod *= factorial(e);
  return prod;
}

// All indices of exact degree d in n variables, lexicographically decreasing
// as vectors: (d,0,..) first, (0,..,0,d) last.
inline std::vector<MultiIndex> indices_of_degree(unsigned n, unsigned d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // recursive distribution of d over the n slots, largest-first in slot 1
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

// Enumeration of all indices with |mu| <= q: graded by degree, decreasing
// lexicographic inside each grade. Every matrix layout in the jet modules
// is pinned to this order, so it must never change.
inline std::vector<MultiIndex> enumerate_jet_indices(unsigned n, unsigned q) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= q; ++d)
    for (auto& mu : indices_of_degree(n, d)) out.push_back(mu);
  return out;
}

inline std::size_t monomial_count(unsigned n, unsigned d) {
  // degree-exactly-d monomials in n variables
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(n + d - 1, d).convert_to<std::size_t>();
}

inline std::size_t jet_fiber_dim(unsigned n, unsigned m, unsigned q) {
  return static_cast<std::size_t>(m) * binomial(n + q, q).convert_to<std::size_t>();
}

// Shared index bookkeeping for anything laid out as (multi-index, fiber
// component): position = index slot * m + (k-1), indices in frozen order.
class JetLayout {
 public:
  JetLayout(unsigned n, unsigned m, unsigned q)
      : n_(n), m_(m), q_(q), mus_(enumerate_jet_indices(n, q)) {
    if (n == 0 || m == 0) throw InputError("jet layout needs positive dimensions");
    for (std::size_t s = 0; s < mus_.size(); ++s) pos_[mus_[s]] = s;
  }

  unsigned base_dim() const { return n_; }
  unsigned fiber_dim() const { return m_; }
  unsigned order() const { return q_; }
  const std::vector<MultiIndex>& indices() const { return mus_; }
  std::size_t coordinate_count() const { return mus_.size() * m_; }

  std::size_t index_slot(const MultiIndex& mu) const {
    auto it = pos_.find(mu);
    if (it == pos_.end()) throw InputError("multi-index outside jet order");
    return it->second;
  }
  std::size_t coordinate(const MultiIndex& mu, unsigned k) const {
    if (k == 0 || k > m_) throw InputError("fiber component out of range");
    return index_slot(mu) * m_ + (k - 1);
  }

 private:
  unsigned n_, m_, q_;
  std::vector<MultiIndex> mus_;
  std::map<MultiIndex, std::size_t> pos_;
};

// Same bookkeeping for a single symbol grade (exact degree q).
class SymbolLayout {
 public:
  SymbolLayout(unsigned n, unsigned m, unsigned q)
      : n_(n), m_(m), q_(q), mus_(indices_of_degree(n, q)) {
    if (n == 0 || m == 0) throw InputError("symbol layout needs positive dimensions");
    for (std::size_t s = 0; s < mus_.size(); ++s) pos_[mus_[s]] = s;
  }

  unsigned base_dim() const { return n_; }
  unsigned fiber_dim() const { return m_; }
  unsigned order() const { return q_; }
  const std::vector<MultiIndex>& indices() const { return mus_; }
  std::size_t coordinate_count() const { return mus_.size() * m_; }

  std::size_t index_slot(const MultiIndex& mu) const {
    auto it = pos_.find(mu);
    if (it == pos_.end()) throw InputError("multi-index outside symbol grade");
    return it->second;
  }
  std::size_t coordinate(const MultiIndex& mu, unsigned k) const {
    if (k == 0 || k > m_) throw InputError("fiber component out of range");
    return index_slot(mu) * m_ + (k - 1);
  }

 private:
  unsigned n_, m_, q_;
  std::vector<MultiIndex> mus_;
  std::map<MultiIndex, std::size_t> pos_;
};

}  // namespace liejets
