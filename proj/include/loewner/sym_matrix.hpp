#pragma once

#include <cstddef>
#include <vector>

#include "loewner/error.hpp"

namespace loewner {

/// Real symmetric matrix, the artifact's stand-in for a self-adjoint operator.
/// Entries are stored dense row-major and are exactly symmetric after
/// construction; the constructor symmetrizes via (M + M^T)/2 and records the
/// asymmetry residual of the raw input.
class SymMatrix {
public:
  SymMatrix() = default; // empty placeholder (dim 0) for report plumbing

  /// Checked construction from raw row-major entries. Rejects non-finite
  /// input and input whose asymmetry residual exceeds 1e-12 * max|entry|.
  SymMatrix(int dim, const std::vector<double>& raw);

  /// Symmetrizes without the residual rejection. For internal products that
  /// are symmetric in exact arithmetic but carry last-bit rounding skew.
  static SymMatrix symmetrized(int dim, const std::vector<double>& raw);

  static SymMatrix zero(int dim);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(const std::vector<double>& d);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }
  double operator()(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const std::vector<double>& data() const { return e_; }
  double asym_residual() const { return asym_residual_; }

  double frobenius_norm() const;
  double max_abs() const;

private:
  int dim_ = 0;
  std::vector<double> e_;
  double asym_residual_ = 0.0;

  void set(int i, int j, double v) { e_[static_cast<size_t>(i) * dim_ + j] = v; }
  static SymMatrix build(int dim, const std::vector<double>& raw, bool checked);
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double s, const SymMatrix& a);

bool same_entries(const SymMatrix& a, const SymMatrix& b);

/// Raw dense product a*b (row-major), no symmetry assumption.
std::vector<double> matmul(int dim, const std::vector<double>& a, const std::vector<double>& b);

/// Product of two symmetric matrices that commute in exact arithmetic
/// (powers of one matrix, congruences); result is symmetrized.
SymMatrix sym_product(const SymMatrix& a, const SymMatrix& b);

/// <Ax, x> for a vector of length dim(A).
double quadratic_form(const SymMatrix& a, const std::vector<double>& x);

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* where);

} // namespace loewner
