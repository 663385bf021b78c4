#include "loewner/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace loewner {

namespace {

double off_diagonal_norm(int n, const std::vector<double>& a) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
  return std::sqrt(s);
}

// Gram-Schmidt within a block of eigenvector columns whose eigenvalues are
// numerically tied. Jacobi already returns an orthogonal V; this removes the
// residual coupling inside degenerate eigenspaces so downstream code only
// relies on the spectral projection.
void reorthonormalize_block(int n, std::vector<double>& v, int first, int last) {
  for (int j = first; j <= last; ++j) {
    for (int k = first; k < j; ++k) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i)
        dot += v[static_cast<size_t>(i) * n + j] * v[static_cast<size_t>(i) * n + k];
      for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i) * n + j] -= dot * v[static_cast<size_t>(i) * n + k];
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i)
      norm += v[static_cast<size_t>(i) * n + j] * v[static_cast<size_t>(i) * n + j];
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i) * n + j] /= norm;
  }
}

} // namespace

SpectralDecomposition eigen_decompose(const SymMatrix& input) {
  const int n = input.dim();
  if (n <= 0)
    fail(ErrorCode::InvalidArgument, "eigen_decompose: empty matrix");

  std::vector<double> a = input.data();
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    v[static_cast<size_t>(i) * n + i] = 1.0;

  const double fro = input.frobenius_norm();
  const double threshold = 1e-13 * fro;
  constexpr int kSweepBudget = 64;

  bool converged = (n == 1) || off_diagonal_norm(n, a) <= threshold;
  for (int sweep = 0; sweep < kSweepBudget && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[static_cast<size_t>(p) * n + q];
        if (apq == 0.0)
          continue;
        const double app = a[static_cast<size_t>(p) * n + p];
        const double aqq = a[static_cast<size_t>(q) * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        // Smaller-angle root of t^2 + 2*theta*t - 1 = 0; stable form.
        double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0)
          t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int i = 0; i < n; ++i) {
          const double aip = a[static_cast<size_t>(i) * n + p];
          const double aiq = a[static_cast<size_t>(i) * n + q];
          a[static_cast<size_t>(i) * n + p] = c * aip - s * aiq;
          a[static_cast<size_t>(i) * n + q] = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const double apj = a[static_cast<size_t>(p) * n + j];
          const double aqj = a[static_cast<size_t>(q) * n + j];
          a[static_cast<size_t>(p) * n + j] = c * apj - s * aqj;
          a[static_cast<size_t>(q) * n + j] = s * apj + c * aqj;
        }
        // Pin the rotated pair to its exact-arithmetic pattern.
        a[static_cast<size_t>(p) * n + q] = 0.0;
        a[static_cast<size_t>(q) * n + p] = 0.0;

        for (int i = 0; i < n; ++i) {
          const double vip = v[static_cast<size_t>(i) * n + p];
          const double viq = v[static_cast<size_t>(i) * n + q];
          v[static_cast<size_t>(i) * n + p] = c * vip - s * viq;
          v[static_cast<size_t>(i) * n + q] = s * vip + c * viq;
        }
      }
    }
    converged = off_diagonal_norm(n, a) <= threshold;
  }
  if (!converged)
    fail(ErrorCode::NonConvergence,
         "Jacobi sweeps exhausted (64) with off-diagonal norm above 1e-13*||A||_F");

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<size_t>(x) * n + x] < a[static_cast<size_t>(y) * n + y];
  });

  SpectralDecomposition d;
  d.dim = n;
  d.source_norm = fro;
  d.eigenvalues.resize(static_cast<size_t>(n));
  d.eigenvectors.resize(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<size_t>(j)];
    d.eigenvalues[static_cast<size_t>(j)] = a[static_cast<size_t>(src) * n + src];
    for (int i = 0; i < n; ++i)
      d.eigenvectors[static_cast<size_t>(i) * n + j] = v[static_cast<size_t>(i) * n + src];
  }

  // Re-orthonormalize columns of numerically repeated eigenvalues.
  const double tie_tol = 1e-10 * std::max(1.0, fro);
  int block_start = 0;
  for (int j = 1; j <= n; ++j) {
    const bool tied = j < n && d.eigenvalues[static_cast<size_t>(j)] -
                                       d.eigenvalues[static_cast<size_t>(j - 1)] <=
                                   tie_tol;
    if (!tied) {
      if (j - 1 > block_start)
        reorthonormalize_block(n, d.eigenvectors, block_start, j - 1);
      block_start = j;
    }
  }
  return d;
}

Interval spectral_interval(const SymMatrix& a) {
  const SpectralDecomposition d = eigen_decompose(a);
  return Interval(d.eigenvalues.front(), d.eigenvalues.back());
}

SymMatrix reconstruct(const SpectralDecomposition& d, const std::vector<double>& lambda) {
  const int n = d.dim;
  if (static_cast<int>(lambda.size()) != n)
    fail(ErrorCode::DimensionMismatch, "reconstruct: eigenvalue count mismatch");
  std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += d.vec(i, k) * lambda[static_cast<size_t>(k)] * d.vec(j, k);
      out[static_cast<size_t>(i) * n + j] = s;
      out[static_cast<size_t>(j) * n + i] = s;
    }
  }
  return SymMatrix::symmetrized(n, out);
}

} // namespace loewner
