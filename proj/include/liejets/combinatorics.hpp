#pragma once

#include <vector>

#include "liejets/rational.hpp"

namespace liejets {

inline Integer factorial(unsigned n) {
  Integer f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer b(1);
  for (unsigned i = 1; i <= k; ++i) {
    b *= (n - k + i);
    b /= i;
  }
  return b;
}

// All strictly increasing k-tuples from {1..n}, in lexicographic order.
inline std::vector<std::vector<unsigned>> increasing_tuples(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > n) return out;
  std::vector<unsigned> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[static_cast<unsigned>(i)] == n - (k - 1 - static_cast<unsigned>(i)))
      --i;
    if (i < 0) break;
    ++cur[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace liejets
