#pragma once

#include <string>
#include <vector>

#include "loewner/means.hpp"
#include "loewner/reports.hpp"
#include "loewner/scalar_function.hpp"

namespace loewner {

inline constexpr int kRatioGridPoints = 4096;

struct RatioConstant {
  double value = 0.0;
  double argmax_or_argmin = 0.0;
  std::string method = "grid+golden_section";
  int grid_points = kRatioGridPoints;
};

/// K(m,M,f): max over [m,M] of secant(f,m,M,t)/f(t). Requires 0 < m < M and
/// f > 0 on [m,M]. Grid bracketing plus golden-section refinement.
RatioConstant big_K(double m, double M, const ScalarFunction& f, Exec exec = Exec::Parallel);

/// k(m,M,f): the corresponding minimum.
RatioConstant small_k(double m, double M, const ScalarFunction& f, Exec exec = Exec::Parallel);

/// Brute-force extremum of the same ratio on a uniform grid of `points`+1
/// values; the independent route used to cross-check big_K / small_k.
double dense_grid_extremum(double m, double M, const ScalarFunction& f, long points, bool maximize,
                           Exec exec = Exec::Parallel);

/// Jensen bound of the Mond-Pecaric method:
/// sum w_i f(A_i) <= K(m,M,f) f(sum w_i A_i) for positive operator convex f.
InequalityReport jensen_upper(const ScalarFunction& f, const std::vector<double>& weights,
                              const std::vector<SymMatrix>& operators, double m, double M);

/// k(m,M,f) f(sum w_i A_i) <= sum w_i f(A_i) for positive operator concave f.
InequalityReport jensen_lower(const ScalarFunction& f, const std::vector<double>& weights,
                              const std::vector<SymMatrix>& operators, double m, double M);

} // namespace loewner
