#include "loewner/means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loewner {

SymMatrix arithmetic_mean(const SymMatrix& a, const SymMatrix& b, double v) {
  require_same_dim(a, b, "arithmetic_mean");
  std::vector<double> e(a.data().size());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = (1.0 - v) * a.data()[i] + v * b.data()[i];
  return SymMatrix::symmetrized(a.dim(), e);
}

SymMatrix geometric_mean(const SymMatrix& a, const SymMatrix& b, double v) {
  require_same_dim(a, b, "geometric_mean");
  if (!(v >= 0.0 && v <= 1.0))
    fail(ErrorCode::WeightOutOfRange, "geometric mean weight must lie in [0,1]");
  if (!is_strictly_positive(a) || !is_strictly_positive(b))
    fail(ErrorCode::NotStrictlyPositive, "geometric mean requires strictly positive operands");

  const SymMatrix root = apply_function(ScalarFunction::power(0.5), a);
  const SymMatrix inv_root = apply_function(ScalarFunction::power(-0.5), a);
  const SymMatrix inner =
      SymMatrix::symmetrized(a.dim(), matmul(a.dim(), matmul(a.dim(), inv_root.data(), b.data()),
                                             inv_root.data()));
  const SymMatrix inner_pow = apply_function(ScalarFunction::power(v), inner);
  return SymMatrix::symmetrized(
      a.dim(), matmul(a.dim(), matmul(a.dim(), root.data(), inner_pow.data()), root.data()));
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int n) {
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "quadrature needs at least one node");
  std::vector<double> x(static_cast<size_t>(n)), w(static_cast<size_t>(n));
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15)
        break;
    }
    x[static_cast<size_t>(i)] = -z;
    x[static_cast<size_t>(n - 1 - i)] = z;
    const double weight = 2.0 / ((1.0 - z * z) * pp * pp);
    w[static_cast<size_t>(i)] = weight;
    w[static_cast<size_t>(n - 1 - i)] = weight;
  }
  return {x, w};
}

namespace {

// One composite pass: `panels` equal panels over [0,1], `nodes` GL nodes
// each. Panel partial sums land in per-panel slots and are reduced in fixed
// panel order, so the parallel path reproduces the serial result exactly.
SymMatrix composite_pass(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                         int nodes, int panels, Exec exec) {
  const auto [x, w] = gauss_legendre_nodes(nodes);
  const int dim = a.dim();
  const size_t entries = static_cast<size_t>(dim) * dim;
  std::vector<std::vector<double>> panel_sums(static_cast<size_t>(panels),
                                              std::vector<double>(entries, 0.0));

  const double h = 1.0 / panels;
  auto eval_panel = [&](int p) {
    std::vector<double>& acc = panel_sums[static_cast<size_t>(p)];
    const double lo = p * h;
    for (int q = 0; q < nodes; ++q) {
      const double v = lo + 0.5 * h * (x[static_cast<size_t>(q)] + 1.0);
      const double weight = 0.5 * h * w[static_cast<size_t>(q)];
      const SymMatrix fv = apply_function(f, arithmetic_mean(a, b, v));
      for (size_t i = 0; i < entries; ++i)
        acc[i] += weight * fv.data()[i];
    }
  };

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int p = 0; p < panels; ++p)
      eval_panel(p);
  } else {
    for (int p = 0; p < panels; ++p)
      eval_panel(p);
  }

  std::vector<double> total(entries, 0.0);
  for (int p = 0; p < panels; ++p)
    for (size_t i = 0; i < entries; ++i)
      total[i] += panel_sums[static_cast<size_t>(p)][i];
  return SymMatrix::symmetrized(dim, total);
}

} // namespace

QuadratureResult hh_integral_mean_detail(const ScalarFunction& f, const SymMatrix& a,
                                         const SymMatrix& b, int nodes, int panels, Exec exec) {
  require_same_dim(a, b, "hh_integral_mean");
  if (nodes < 1 || panels < 1)
    fail(ErrorCode::InvalidArgument, "hh_integral_mean needs positive nodes and panels");

  // The integrand is defined on every mean iff the hull of the endpoint
  // spectra sits inside the domain; apply_function still checks per node.
  const Interval hull_ab = hull(spectral_interval(a), spectral_interval(b));
  const FunctionDomain& dom = f.domain();
  const double slack = 1e-12 * std::max(1.0, std::fabs(hull_ab.lo));
  if (!dom.contains(hull_ab.lo) && !(!dom.lo_open && std::fabs(hull_ab.lo - dom.lo) <= slack))
    fail(ErrorCode::DomainViolation,
         "spectra hull " + std::to_string(hull_ab.lo) + " .. " + std::to_string(hull_ab.hi) +
             " not inside domain " + dom.describe());
  if (!dom.contains(hull_ab.hi) && !(!dom.hi_open && std::fabs(hull_ab.hi - dom.hi) <= slack))
    fail(ErrorCode::DomainViolation,
         "spectra hull " + std::to_string(hull_ab.lo) + " .. " + std::to_string(hull_ab.hi) +
             " not inside domain " + dom.describe());

  const SymMatrix coarse = composite_pass(f, a, b, nodes, panels, exec);
  const SymMatrix fine = composite_pass(f, a, b, nodes, 2 * panels, exec);

  QuadratureResult res;
  res.refinement_delta = (coarse - fine).frobenius_norm() / std::max(1.0, fine.frobenius_norm());
  res.value = fine;
  res.nodes_per_panel = nodes;
  res.panels = panels;
  return res;
}

SymMatrix hh_integral_mean(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                           int nodes, Exec exec) {
  QuadratureResult res = hh_integral_mean_detail(f, a, b, nodes, kDefaultQuadPanels, exec);
  if (res.refinement_delta > kQuadRefinementTol)
    fail(ErrorCode::QuadratureNotConverged,
         "refinement delta " + std::to_string(res.refinement_delta) + " above 1e-8");
  return res.value;
}

} // namespace loewner
