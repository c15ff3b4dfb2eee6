#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liejets/matrix.hpp"

namespace liejets {

inline QMatrix evaluate_matrix(const FMatrix& m, const std::vector<Rational>& p) {
  QMatrix q = make_qmatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q.at(i, j) = m.at(i, j).eval(p);
  return q;
}

// Deterministic source of candidate rational points. Sampling bounds grow
// with every draw so a run can always escape a thin bad set; every
// constraint is still checked exactly before a point is accepted.
class GenericPoint {
 public:
  explicit GenericPoint(std::uint64_t seed = 0) : rng_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::vector<Rational> sample(unsigned nvars) {
    ++attempt_;
    long bound = 3 + attempt_ / 4;
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> p;
    p.reserve(nvars);
    for (unsigned i = 0; i < nvars; ++i) p.emplace_back(Rational(num(rng_), den(rng_)));
    return p;
  }

  // A point at which every entry of m is defined.
  std::vector<Rational> find_regular(const FMatrix& m, unsigned nvars) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
      std::vector<Rational> p = sample(nvars);
      if (all_defined(m, p)) return p;
    }
    throw MathError("failed to find a regular point");
  }

  // A point at which m is defined and its evaluated rank matches the rank
  // over the function field, so dimension counts read off the evaluation
  // agree with the generic ones.
  std::vector<Rational> find_rank_preserving(const FMatrix& m, unsigned nvars,
                                             std::size_t generic_rank) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
      std::vector<Rational> p = sample(nvars);
      if (!all_defined(m, p)) continue;
      if (evaluate_matrix(m, p).rank() == generic_rank) return p;
    }
    throw MathError("failed to find a rank-preserving point");
  }

  // One point that works for a whole family of matrices at once; each pair
  // carries the matrix and its function-field rank.
  std::vector<Rational> find_rank_preserving_all(
      const std::vector<std::pair<const FMatrix*, std::size_t>>& family, unsigned nvars) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
      std::vector<Rational> p = sample(nvars);
      bool ok = true;
      for (const auto& [m, r] : family) {
        if (!all_defined(*m, p) || evaluate_matrix(*m, p).rank() != r) {
          ok = false;
          break;
        }
      }
      if (ok) return p;
    }
    throw MathError("failed to find a rank-preserving point");
  }

  std::vector<Rational> find_nonvanishing(const RationalFunction& f) {
    if (f.is_zero()) throw MathError("identically zero");
    for (int tries = 0; tries < kMaxTries; ++tries) {
      std::vector<Rational> p = sample(f.nvars());
      if (f.defined_at(p) && f.eval(p) != 0) return p;
    }
    throw MathError("failed to find a nonvanishing point");
  }

 private:
  static constexpr int kMaxTries = 256;

  static bool all_defined(const FMatrix& m, const std::vector<Rational>& p) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).defined_at(p)) return false;
    return true;
  }

  std::mt19937_64 rng_;
  int attempt_ = 0;
};

}  // namespace liejets
