#pragma once

#include <utility>
#include <vector>

#include "loewner/calculus.hpp"
#include "loewner/sym_matrix.hpp"

namespace loewner {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path kept for testing; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

/// A nabla_v B = (1-v) A + v B; valid for any real weight.
SymMatrix arithmetic_mean(const SymMatrix& a, const SymMatrix& b, double v);

/// A sharp_v B = A^{1/2} (A^{-1/2} B A^{-1/2})^v A^{1/2}, v in [0,1];
/// both operands must be strictly positive.
SymMatrix geometric_mean(const SymMatrix& a, const SymMatrix& b, double v);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int n);

struct QuadratureResult {
  SymMatrix value;                // refined (doubled-panel) evaluation
  double refinement_delta = 0.0;  // ||coarse - fine||_F / max(1, ||fine||_F)
  int nodes_per_panel = 0;
  int panels = 0;
};

inline constexpr int kDefaultQuadPanels = 8;
inline constexpr double kQuadRefinementTol = 1e-8;

/// Composite Gauss-Legendre approximation of the matrix-valued integral
/// of f((1-v)A + vB) over v in [0,1], with a doubled-panel refinement check.
QuadratureResult hh_integral_mean_detail(const ScalarFunction& f, const SymMatrix& a,
                                         const SymMatrix& b, int nodes,
                                         int panels = kDefaultQuadPanels,
                                         Exec exec = Exec::Parallel);

/// Same as above but throws QuadratureNotConverged when the refinement
/// delta exceeds 1e-8 relative.
SymMatrix hh_integral_mean(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                           int nodes, Exec exec = Exec::Parallel);

} // namespace loewner
