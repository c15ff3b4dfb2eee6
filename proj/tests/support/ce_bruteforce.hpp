#pragma once

// Deliberately primitive reference implementation of Lie-algebra cochain
// complexes: dense differential matrices plus Gaussian elimination, nothing
// shared with the library besides the rational scalar. Comparison tests pit
// the optimized code against these numbers, so keep this file boring.

#include <cstddef>
#include <vector>

#include "liejets/rational.hpp"

namespace ce_oracle {

using liejets::Rational;

struct Algebra {
  unsigned p = 0;
  std::vector<Rational> c;  // c[k][i][j], all indices 0-based, flattened

  Rational& at(unsigned k, unsigned i, unsigned j) { return c[(k * p + i) * p + j]; }
  const Rational& at(unsigned k, unsigned i, unsigned j) const {
    return c[(k * p + i) * p + j];
  }
};

inline Algebra make(unsigned p) {
  Algebra a;
  a.p = p;
  a.c.assign(static_cast<std::size_t>(p) * p * p, Rational(0));
  return a;
}

// One-based indices here to match the usual c^k_{ij} tables.
inline void set_bracket(Algebra& a, unsigned k, unsigned i, unsigned j, const Rational& v) {
  a.at(k - 1, i - 1, j - 1) = v;
  a.at(k - 1, j - 1, i - 1) = -v;
}

inline std::vector<Rational> bracket(const Algebra& a, const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
  std::vector<Rational> z(a.p, Rational(0));
  for (unsigned k = 0; k < a.p; ++k)
    for (unsigned i = 0; i < a.p; ++i)
      for (unsigned j = 0; j < a.p; ++j) z[k] += a.at(k, i, j) * x[i] * y[j];
  return z;
}

inline std::vector<Rational> jacobi_defect(const Algebra& a, unsigned i, unsigned j,
                                           unsigned k) {
  std::vector<Rational> ei(a.p, Rational(0)), ej(a.p, Rational(0)), ek(a.p, Rational(0));
  ei[i - 1] = 1;
  ej[j - 1] = 1;
  ek[k - 1] = 1;
  auto term = [&](const std::vector<Rational>& x, const std::vector<Rational>& y,
                  const std::vector<Rational>& z) { return bracket(a, bracket(a, x, y), z); };
  std::vector<Rational> d(a.p, Rational(0));
  auto t1 = term(ei, ej, ek), t2 = term(ej, ek, ei), t3 = term(ek, ei, ej);
  for (unsigned m = 0; m < a.p; ++m) d[m] = t1[m] + t2[m] + t3[m];
  return d;
}

inline bool jacobi_holds(const Algebra& a) {
  for (unsigned i = 1; i <= a.p; ++i)
    for (unsigned j = i + 1; j <= a.p; ++j)
      for (unsigned k = j + 1; k <= a.p; ++k)
        for (const Rational& v : jacobi_defect(a, i, j, k))
          if (v != 0) return false;
  return true;
}

inline std::vector<std::vector<unsigned>> subsets(unsigned p, unsigned r) {
  std::vector<std::vector<unsigned>> out;
  if (r > p) return out;
  std::vector<unsigned> cur(r);
  for (unsigned i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && cur[static_cast<unsigned>(i)] == p - r + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++cur[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::size_t cochain_dim(const Algebra& a, unsigned r) {
  return subsets(a.p, r).size() * a.p;
}

// Insert value m into the ascending tuple rest; returns the sorted tuple and
// the sign of the permutation, or sign 0 when m already occurs.
inline int insert_sorted(std::vector<unsigned>& rest, unsigned m) {
  unsigned pos = 0;
  for (unsigned e : rest) {
    if (e == m) return 0;
    if (e < m) ++pos;
  }
  rest.insert(rest.begin() + pos, m);
  return pos % 2 == 0 ? 1 : -1;
}

// Matrix of the degree-r differential, rows indexed by (r+1)-cochain basis
// elements, columns by r-cochain basis elements. The differential of a
// g-valued alternating map f is
//   df(X_1..X_{r+1}) = sum_{a<b} (-1)^{a+b} f([X_a,X_b], .. no X_a, X_b ..)
//                    + sum_a (-1)^{a+1} [X_a, f(.. no X_a ..)]
inline std::vector<std::vector<Rational>> differential_matrix(const Algebra& alg,
                                                              unsigned r) {
  auto dom = subsets(alg.p, r);
  auto cod = subsets(alg.p, r + 1);
  std::size_t rows = cod.size() * alg.p, cols = dom.size() * alg.p;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));

  for (std::size_t si = 0; si < dom.size(); ++si) {
    const auto& S = dom[si];
    for (unsigned k = 0; k < alg.p; ++k) {
      std::size_t col = si * alg.p + k;
      for (std::size_t ti = 0; ti < cod.size(); ++ti) {
        const auto& T = cod[ti];
        // bracket-inside terms
        for (unsigned a = 0; a < T.size(); ++a) {
          for (unsigned b = a + 1; b < T.size(); ++b) {
            int outer = ((a + 1) + (b + 1)) % 2 == 0 ? 1 : -1;
            std::vector<unsigned> rest;
            for (unsigned t = 0; t < T.size(); ++t)
              if (t != a && t != b) rest.push_back(T[t]);
            for (unsigned mm = 0; mm < alg.p; ++mm) {
              Rational cf = alg.at(mm, T[a], T[b]);
              if (cf == 0) continue;
              std::vector<unsigned> args = rest;
              int sign = insert_sorted(args, mm);
              if (sign == 0 || args != S) continue;
              m[ti * alg.p + k][col] += Rational(outer * sign) * cf;
            }
          }
        }
        // bracket-outside terms
        for (unsigned a = 0; a < T.size(); ++a) {
          std::vector<unsigned> rest;
          for (unsigned t = 0; t < T.size(); ++t)
            if (t != a) rest.push_back(T[t]);
          if (rest != S) continue;
          int outer = (a + 2) % 2 == 0 ? 1 : -1;  // (-1)^{a+1} with 1-based a
          for (unsigned mm = 0; mm < alg.p; ++mm) {
            Rational cf = alg.at(mm, T[a], k);
            if (cf == 0) continue;
            m[ti * alg.p + mm][col] += Rational(outer) * cf;
          }
        }
      }
    }
  }
  return m;
}

inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rk; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

inline std::size_t coboundary_dim(const Algebra& a, unsigned r) {
  if (r == 0) return 0;
  return rank(differential_matrix(a, r - 1));
}

inline std::size_t cocycle_dim(const Algebra& a, unsigned r) {
  return cochain_dim(a, r) - rank(differential_matrix(a, r));
}

inline std::size_t cohomology_dim(const Algebra& a, unsigned r) {
  return cocycle_dim(a, r) - coboundary_dim(a, r);
}

}  // namespace ce_oracle
