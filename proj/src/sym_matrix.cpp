#include "loewner/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace loewner {

SymMatrix SymMatrix::build(int dim, const std::vector<double>& raw, bool checked) {
  if (dim <= 0)
    fail(ErrorCode::InvalidArgument, "matrix dimension must be positive");
  if (raw.size() != static_cast<size_t>(dim) * dim)
    fail(ErrorCode::DimensionMismatch,
         "expected " + std::to_string(dim) + "x" + std::to_string(dim) + " entries, got " +
             std::to_string(raw.size()));

  double max_abs = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v))
      fail(ErrorCode::NonFiniteEntry, "matrix entries must be finite");
    max_abs = std::max(max_abs, std::fabs(v));
  }

  SymMatrix m;
  m.dim_ = dim;
  m.e_.resize(raw.size());
  double residual = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const double upper = raw[static_cast<size_t>(i) * dim + j];
      const double lower = raw[static_cast<size_t>(j) * dim + i];
      residual = std::max(residual, std::fabs(upper - lower));
      const double sym = (upper + lower) / 2.0;
      m.set(i, j, sym);
      m.set(j, i, sym);
    }
  }
  m.asym_residual_ = residual;
  if (checked && residual > 1e-12 * max_abs)
    fail(ErrorCode::NotSymmetric, "asymmetry residual " + std::to_string(residual) +
                                      " exceeds 1e-12 * max|entry| = " +
                                      std::to_string(1e-12 * max_abs));
  return m;
}

SymMatrix::SymMatrix(int dim, const std::vector<double>& raw) { *this = build(dim, raw, true); }

SymMatrix SymMatrix::symmetrized(int dim, const std::vector<double>& raw) {
  return build(dim, raw, false);
}

SymMatrix SymMatrix::zero(int dim) {
  return SymMatrix(dim, std::vector<double>(static_cast<size_t>(dim) * dim, 0.0));
}

SymMatrix SymMatrix::identity(int dim) {
  std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i)
    e[static_cast<size_t>(i) * dim + i] = 1.0;
  return SymMatrix(dim, e);
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  const int dim = static_cast<int>(d.size());
  std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i)
    e[static_cast<size_t>(i) * dim + i] = d[static_cast<size_t>(i)];
  return SymMatrix(dim, e);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int dim = static_cast<int>(rows.size());
  std::vector<double> e;
  e.reserve(static_cast<size_t>(dim) * dim);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "matrix rows have unequal lengths");
    e.insert(e.end(), row.begin(), row.end());
  }
  return SymMatrix(dim, e);
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : e_)
    s += v * v;
  return std::sqrt(s);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : e_)
    m = std::max(m, std::fabs(v));
  return m;
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* where) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch, std::string(where) + ": operands have dims " +
                                           std::to_string(a.dim()) + " and " +
                                           std::to_string(b.dim()));
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "operator+");
  std::vector<double> e(a.data());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] += b.data()[i];
  return SymMatrix::symmetrized(a.dim(), e);
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "operator-");
  std::vector<double> e(a.data());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] -= b.data()[i];
  return SymMatrix::symmetrized(a.dim(), e);
}

SymMatrix operator*(double s, const SymMatrix& a) {
  std::vector<double> e(a.data());
  for (double& v : e)
    v *= s;
  return SymMatrix::symmetrized(a.dim(), e);
}

bool same_entries(const SymMatrix& a, const SymMatrix& b) {
  return a.dim() == b.dim() && a.data() == b.data();
}

std::vector<double> matmul(int dim, const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const double aik = a[static_cast<size_t>(i) * dim + k];
      if (aik == 0.0)
        continue;
      for (int j = 0; j < dim; ++j)
        c[static_cast<size_t>(i) * dim + j] += aik * b[static_cast<size_t>(k) * dim + j];
    }
  }
  return c;
}

SymMatrix sym_product(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "sym_product");
  return SymMatrix::symmetrized(a.dim(), matmul(a.dim(), a.data(), b.data()));
}

double quadratic_form(const SymMatrix& a, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != a.dim())
    fail(ErrorCode::DimensionMismatch, "quadratic_form: vector length mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double row = 0.0;
    for (int j = 0; j < a.dim(); ++j)
      row += a(i, j) * x[static_cast<size_t>(j)];
    s += x[static_cast<size_t>(i)] * row;
  }
  return s;
}

} // namespace loewner
