#pragma once

#include <cmath>
#include <vector>

#include "loewner/sym_matrix.hpp"

namespace loewner::test {

inline double max_entry_diff(const SymMatrix& a, const SymMatrix& b) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      worst = std::max(worst, std::fabs(a(i, j) - b(i, j)));
  return worst;
}

inline bool approx_entries(const SymMatrix& a, const std::vector<std::vector<double>>& rows,
                           double tol) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (std::fabs(a(i, j) - rows[static_cast<size_t>(i)][static_cast<size_t>(j)]) > tol)
        return false;
  return true;
}

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}

} // namespace loewner::test
