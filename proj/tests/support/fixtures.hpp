#pragma once

#include <string>
#include <vector>

inline std::string data_path(const std::string& rel) {
  return std::string(LIEJETS_DATA_DIR) + "/" + rel;
}

// Every shipped algebra that satisfies the Jacobi identity.
inline const std::vector<std::string>& algebra_catalog() {
  static const std::vector<std::string> names{
      "abelian2", "abelian3", "abelian4", "heisenberg3", "sl2", "affine2", "so3", "solv3"};
  return names;
}
