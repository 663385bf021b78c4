#pragma once

#include <vector>

#include "loewner/interval.hpp"
#include "loewner/sym_matrix.hpp"

namespace loewner {

/// Eigenvalues ascending with matching orthonormal eigenvector columns.
struct SpectralDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> eigenvectors; // row-major; column j pairs with eigenvalues[j]
  double source_norm = 0.0;         // Frobenius norm of the decomposed matrix

  double vec(int i, int j) const { return eigenvectors[static_cast<size_t>(i) * dim + j]; }
};

/// Cyclic Jacobi diagonalization. Converges when the off-diagonal Frobenius
/// norm drops below 1e-13 * ||A||_F; throws NonConvergence after 64 sweeps.
SpectralDecomposition eigen_decompose(const SymMatrix& a);

/// Smallest closed interval containing the spectrum.
Interval spectral_interval(const SymMatrix& a);

/// Rebuild V * diag(lambda) * V^T (symmetrized); used by the functional
/// calculus and by reconstruction tests.
SymMatrix reconstruct(const SpectralDecomposition& d, const std::vector<double>& lambda);

} // namespace loewner
