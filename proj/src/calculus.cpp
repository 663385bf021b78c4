#include "loewner/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace loewner {

const char* relation_name(Relation r) {
  switch (r) {
  case Relation::LessOrEqual: return "LessOrEqual";
  case Relation::GreaterOrEqual: return "GreaterOrEqual";
  case Relation::Equal: return "Equal";
  case Relation::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

// Clamp an eigenvalue onto a closed domain endpoint when it misses it by
// rounding noise only; open endpoints stay strict.
double admit_eigenvalue(const ScalarFunction& f, double lambda) {
  const FunctionDomain& d = f.domain();
  if (d.contains(lambda))
    return lambda;
  const double slack = 1e-12 * std::max(1.0, std::fabs(lambda));
  if (!d.lo_open && lambda < d.lo && d.lo - lambda <= slack)
    return d.lo;
  if (!d.hi_open && lambda > d.hi && lambda - d.hi <= slack)
    return d.hi;
  fail(ErrorCode::DomainViolation, "eigenvalue " + std::to_string(lambda) + " outside domain " +
                                       d.describe() + " of " + f.spec_string());
}

} // namespace

SymMatrix apply_function(const ScalarFunction& f, const SymMatrix& a) {
  const SpectralDecomposition d = eigen_decompose(a);
  std::vector<double> mapped(d.eigenvalues.size());
  for (size_t i = 0; i < d.eigenvalues.size(); ++i)
    mapped[i] = f.eval_unchecked(admit_eigenvalue(f, d.eigenvalues[i]));
  for (double v : mapped)
    if (!std::isfinite(v))
      fail(ErrorCode::DomainViolation, "function value not finite under " + f.spec_string());
  return reconstruct(d, mapped);
}

SymMatrix matrix_power(const SymMatrix& a, double r) {
  if (r == 1.0)
    return a;

  const bool integer_exponent = (r == std::floor(r)) && std::fabs(r) < 1e6;
  const SpectralDecomposition d = eigen_decompose(a);
  const double lambda_min = d.eigenvalues.front();
  const double slack = 1e-12 * std::max(1.0, d.source_norm);

  if (integer_exponent && r >= 0.0) {
    if (lambda_min < -slack)
      fail(ErrorCode::DomainViolation,
           "integer power of a matrix with negative spectrum (lambda_min = " +
               std::to_string(lambda_min) + ")");
    const int k = static_cast<int>(r);
    SymMatrix out = SymMatrix::identity(a.dim());
    for (int i = 0; i < k; ++i)
      out = sym_product(out, a);
    return out;
  }

  // Negative or fractional exponents need an invertible positive matrix.
  if (!(lambda_min > 0.0))
    fail(ErrorCode::DomainViolation, "power " + std::to_string(r) +
                                         " requires a strictly positive spectrum, lambda_min = " +
                                         std::to_string(lambda_min));
  return apply_function(ScalarFunction::power(r), a);
}

LoewnerVerdict loewner_compare(const SymMatrix& a, const SymMatrix& b, double rel_tol) {
  require_same_dim(a, b, "loewner_compare");
  if (!(rel_tol >= 0.0))
    fail(ErrorCode::InvalidArgument, "loewner_compare: rel_tol must be >= 0");

  const SymMatrix diff = a - b;
  const SpectralDecomposition d = eigen_decompose(diff);

  LoewnerVerdict v;
  v.min_eig_of_difference = d.eigenvalues.front();
  v.max_eig_of_difference = d.eigenvalues.back();
  v.tolerance_used = rel_tol * std::max(1.0, diff.frobenius_norm());

  const bool ge = v.min_eig_of_difference >= -v.tolerance_used;
  const bool le = v.max_eig_of_difference <= v.tolerance_used;
  if (ge && le)
    v.relation = Relation::Equal;
  else if (ge)
    v.relation = Relation::GreaterOrEqual;
  else if (le)
    v.relation = Relation::LessOrEqual;
  else
    v.relation = Relation::Incomparable;
  return v;
}

bool is_strictly_positive(const SymMatrix& a) {
  const SpectralDecomposition d = eigen_decompose(a);
  return d.eigenvalues.front() > a.dim() * 1e-12 * d.source_norm;
}

} // namespace loewner
