#pragma once

#include <optional>
#include <vector>

#include "loewner/constants.hpp"
#include "loewner/hypotheses.hpp"
#include "loewner/means.hpp"
#include "loewner/reports.hpp"

namespace loewner {

/// Caller-supplied spectral bounds; the theorems are stated for any valid
/// bounds, tightest-by-default comes from operator_bounds.
struct BoundsOverride {
  Interval nN;
  Interval mM;
};

/// f(A nabla_v B) <= f(A) nabla_v f(B) for convex f under the disjoint
/// mean-interval hypothesis (reversed for concave f), 0 < v < 1. The
/// conclusion is evaluated even when the hypothesis fails, and labeled.
InequalityReport check_thm1(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                            double v, std::optional<BoundsOverride> bounds = {},
                            double rel_tol = kDefaultLoewnerRelTol);

/// The v >= 1 variant with the enclosing-interval hypothesis.
InequalityReport check_thm2(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                            double v, std::optional<BoundsOverride> bounds = {},
                            double rel_tol = kDefaultLoewnerRelTol);

/// 2 f(A+B) <= f(2A) + f(2B) for convex f; the second link
/// f(A+B) <= f(A) + f(B) is added when f has the doubling property.
InequalityReport check_subadditivity_double(const ScalarFunction& f, const SymMatrix& a,
                                            const SymMatrix& b,
                                            double rel_tol = kDefaultLoewnerRelTol);

/// 2^{1-r} (A+B)^r <= A^r + B^r for r > 1 or r < 0, reversed for r in [0,1];
/// hypothesis: tau(A) and tau(B) disjoint from tau((A+B)/2).
InequalityReport check_power(double r, const SymMatrix& a, const SymMatrix& b,
                             double rel_tol = kDefaultLoewnerRelTol);

/// f((A+B)/2) <= integral of f(A nabla_v B) dv <= (f(A)+f(B))/2.
InequalityReport check_hh_chain(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                                int nodes, double rel_tol = kDefaultLoewnerRelTol);

/// 2f(A+B) <= 2f(A nabla B) <= 2(f(A) # f(B)) <= f(A) + f(B) for operator
/// monotone decreasing f on strictly positive A, B.
InequalityReport check_decreasing_chain(const ScalarFunction& f, const SymMatrix& a,
                                        const SymMatrix& b,
                                        double rel_tol = kDefaultLoewnerRelTol);

/// f(A) + f(B) <= 4 K(m,M,f) f(A+B) under 0 < m <= 2n <= 2N <= M.
InequalityReport check_reverse_subadditivity(const ScalarFunction& f, const SymMatrix& a,
                                             const SymMatrix& b, double m, double M,
                                             double rel_tol = kDefaultLoewnerRelTol);

/// k(m,M,f) f(A+B) <= f(A) + f(B) for operator concave f under the sandwich.
InequalityReport check_concave_lower(const ScalarFunction& f, const SymMatrix& a,
                                     const SymMatrix& b, double m, double M,
                                     double rel_tol = kDefaultLoewnerRelTol);

enum class EllSumMode { ConcaveLower, DecreasingUpper };

/// ell-operator extension: f(sum A_i) <= (1/k) sum f(A_i) for operator
/// concave f; (1/(ell^2 K)) sum f(A_i) <= f(sum A_i) for operator monotone
/// decreasing f; both under m <= ell*n <= ell*N <= M.
InequalityReport check_ell_sum(const ScalarFunction& f, const std::vector<SymMatrix>& operators,
                               double m, double M, EllSumMode mode,
                               double rel_tol = kDefaultLoewnerRelTol);

/// f(A)+f(B) <= K(m,M,f) f(A+B) for convex f with f(0) = 0;
/// k(m,M,f) f(A+B) <= f(A)+f(B) for concave f. Spectra of A, B in [m,M].
InequalityReport check_K_k_subadditivity(const ScalarFunction& f, const SymMatrix& a,
                                         const SymMatrix& b, double m, double M,
                                         double rel_tol = kDefaultLoewnerRelTol);

/// The scalar inner-product inequalities for a unit vector x: the Jensen
/// inequality by convexity/concavity and its Mond-Pecaric reverses. The
/// concave reverse is reported in both orientations.
InnerJensenReport check_inner_jensen(const ScalarFunction& f, const SymMatrix& a,
                                     const std::vector<double>& x, double m, double M);

/// Tightest auto bounds for the sandwich theorems:
/// n = min lambda_min, N = max lambda_max, m = 2n, M = 2N.
std::pair<double, double> auto_sandwich_bounds(const SymMatrix& a, const SymMatrix& b);

} // namespace loewner
