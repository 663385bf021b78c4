#include "loewner/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/digest.hpp"
#include "loewner/eigen.hpp"

namespace loewner {

namespace {

void validate_ratio_inputs(double m, double M, const ScalarFunction& f) {
  if (!(m < M))
    fail(ErrorCode::DegenerateInterval, "ratio constant needs m < M");
  if (!(m > 0.0))
    fail(ErrorCode::DomainViolation, "ratio constant needs m > 0");
  if (!f.domain().contains(m) || !f.domain().contains(M))
    fail(ErrorCode::DomainViolation, "[m,M] not inside domain of " + f.spec_string());
}

// secant(f,m,M,t) / f(t) with endpoint values precomputed.
struct Ratio {
  double m, M, fm, fM;
  const ScalarFunction& f;
  double operator()(double t) const {
    const double ft = f.eval_unchecked(t);
    return (((M - t) * fm + (t - m) * fM) / (M - m)) / ft;
  }
};

// Golden-section refinement of an extremum inside [lo, hi] down to the
// requested interval width. `sign` is +1 to maximize, -1 to minimize.
std::pair<double, double> golden_section(const Ratio& ratio, double lo, double hi, double sign) {
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr double kWidthTol = 1e-12;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = sign * ratio(c);
  double fd = sign * ratio(d);
  while (hi - lo > kWidthTol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = sign * ratio(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = sign * ratio(d);
    }
  }
  const double t = 0.5 * (lo + hi);
  return {t, ratio(t)};
}

RatioConstant ratio_extremum(double m, double M, const ScalarFunction& f, bool maximize,
                             Exec exec) {
  validate_ratio_inputs(m, M, f);

  const Ratio ratio{m, M, f.eval(m), f.eval(M), f};
  const int n = kRatioGridPoints;
  const double h = (M - m) / (n - 1);

  // Positivity scan and ratio table; the table is filled independently per
  // index so the parallel path is bit-identical to the serial one.
  std::vector<double> fvals(static_cast<size_t>(n));
  std::vector<double> rvals(static_cast<size_t>(n));
  auto eval_point = [&](int i) {
    const double t = (i == n - 1) ? M : m + i * h;
    fvals[static_cast<size_t>(i)] = f.eval_unchecked(t);
    rvals[static_cast<size_t>(i)] = ratio(t);
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i)
      eval_point(i);
  } else {
    for (int i = 0; i < n; ++i)
      eval_point(i);
  }

  for (int i = 0; i < n; ++i)
    if (!(fvals[static_cast<size_t>(i)] > 0.0))
      fail(ErrorCode::NonPositiveFunction,
           f.spec_string() + " is not strictly positive on [m,M] (f(" +
               std::to_string(m + i * h) + ") <= 0)");

  // Bracket the best grid point; ties break toward the smaller t.
  int best = 0;
  for (int i = 1; i < n; ++i) {
    const bool better = maximize ? rvals[static_cast<size_t>(i)] > rvals[static_cast<size_t>(best)]
                                 : rvals[static_cast<size_t>(i)] < rvals[static_cast<size_t>(best)];
    if (better)
      best = i;
  }
  const double lo = (best == 0) ? m : m + (best - 1) * h;
  const double hi = (best == n - 1) ? M : m + (best + 1) * h;

  auto [t_star, r_star] = golden_section(ratio, lo, hi, maximize ? 1.0 : -1.0);

  // The refined point can only improve on the bracket; endpoints of [m,M]
  // (where the ratio is exactly 1) stay candidates.
  RatioConstant out;
  out.value = r_star;
  out.argmax_or_argmin = t_star;
  const double at_best_grid = rvals[static_cast<size_t>(best)];
  const bool grid_better = maximize ? at_best_grid > r_star : at_best_grid < r_star;
  if (grid_better) {
    out.value = at_best_grid;
    out.argmax_or_argmin = (best == n - 1) ? M : m + best * h;
  }
  return out;
}

} // namespace

RatioConstant big_K(double m, double M, const ScalarFunction& f, Exec exec) {
  return ratio_extremum(m, M, f, /*maximize=*/true, exec);
}

RatioConstant small_k(double m, double M, const ScalarFunction& f, Exec exec) {
  return ratio_extremum(m, M, f, /*maximize=*/false, exec);
}

double dense_grid_extremum(double m, double M, const ScalarFunction& f, long points, bool maximize,
                           Exec exec) {
  validate_ratio_inputs(m, M, f);
  if (points < 2)
    fail(ErrorCode::InvalidArgument, "dense_grid_extremum needs at least 2 points");

  const Ratio ratio{m, M, f.eval(m), f.eval(M), f};
  const double h = (M - m) / static_cast<double>(points);

  double best = ratio(m);
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
    if (maximize) {
#pragma omp parallel for schedule(static) reduction(max : best)
      for (long i = 1; i <= points; ++i)
        best = std::max(best, ratio((i == points) ? M : m + i * h));
    } else {
#pragma omp parallel for schedule(static) reduction(min : best)
      for (long i = 1; i <= points; ++i)
        best = std::min(best, ratio((i == points) ? M : m + i * h));
    }
    return best;
#endif
  }
  for (long i = 1; i <= points; ++i) {
    const double r = ratio((i == points) ? M : m + i * h);
    best = maximize ? std::max(best, r) : std::min(best, r);
  }
  return best;
}

namespace {

void validate_jensen_inputs(const std::vector<double>& weights,
                            const std::vector<SymMatrix>& operators, double m, double M) {
  if (weights.empty() || weights.size() != operators.size())
    fail(ErrorCode::DimensionMismatch, "weights and operators must pair up");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0))
      fail(ErrorCode::WeightOutOfRange, "weights must be positive");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    fail(ErrorCode::WeightsNotNormalized, "weights sum to " + std::to_string(sum));
  for (const SymMatrix& a : operators) {
    const Interval tau = spectral_interval(a);
    const double slack = 1e-12 * std::max(1.0, a.frobenius_norm());
    if (tau.lo < m - slack || tau.hi > M + slack)
      fail(ErrorCode::SpectraOutOfBounds, "operator spectrum [" + std::to_string(tau.lo) + ", " +
                                              std::to_string(tau.hi) + "] not inside [" +
                                              std::to_string(m) + ", " + std::to_string(M) + "]");
  }
}

std::string jensen_digest(const char* tag, const ScalarFunction& f,
                          const std::vector<double>& weights,
                          const std::vector<SymMatrix>& operators, double m, double M) {
  std::string payload = tag;
  payload += "|" + f.spec_string() + "|";
  append_number(payload, m);
  append_number(payload, M);
  for (double w : weights)
    append_number(payload, w);
  for (const SymMatrix& a : operators)
    append_matrix(payload, a);
  return hex64(fnv1a64(payload));
}

} // namespace

InequalityReport jensen_upper(const ScalarFunction& f, const std::vector<double>& weights,
                              const std::vector<SymMatrix>& operators, double m, double M) {
  if (!f.flags().operator_convex)
    fail(ErrorCode::FlagMissing, "jensen_upper needs an operator convex function");
  validate_jensen_inputs(weights, operators, m, M);

  const RatioConstant k = big_K(m, M, f);
  const int dim = operators.front().dim();
  SymMatrix mix = SymMatrix::zero(dim);
  SymMatrix lhs = SymMatrix::zero(dim);
  for (size_t i = 0; i < operators.size(); ++i) {
    mix = mix + weights[i] * operators[i];
    lhs = lhs + weights[i] * apply_function(f, operators[i]);
  }
  const SymMatrix rhs = k.value * apply_function(f, mix);

  InequalityReport rep;
  rep.theorem_id = "jensen_upper";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.verdict = loewner_compare(rhs, lhs);
  rep.notes = "K(" + std::to_string(m) + "," + std::to_string(M) + "," + f.spec_string() +
              ") = " + std::to_string(k.value);
  rep.input_digest = jensen_digest("jensen_upper", f, weights, operators, m, M);
  return rep;
}

InequalityReport jensen_lower(const ScalarFunction& f, const std::vector<double>& weights,
                              const std::vector<SymMatrix>& operators, double m, double M) {
  if (!f.flags().operator_concave)
    fail(ErrorCode::FlagMissing, "jensen_lower needs an operator concave function");
  validate_jensen_inputs(weights, operators, m, M);

  const RatioConstant k = small_k(m, M, f);
  const int dim = operators.front().dim();
  SymMatrix mix = SymMatrix::zero(dim);
  SymMatrix rhs = SymMatrix::zero(dim);
  for (size_t i = 0; i < operators.size(); ++i) {
    mix = mix + weights[i] * operators[i];
    rhs = rhs + weights[i] * apply_function(f, operators[i]);
  }
  const SymMatrix lhs = k.value * apply_function(f, mix);

  InequalityReport rep;
  rep.theorem_id = "jensen_lower";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.verdict = loewner_compare(rhs, lhs);
  rep.notes = "k(" + std::to_string(m) + "," + std::to_string(M) + "," + f.spec_string() +
              ") = " + std::to_string(k.value);
  rep.input_digest = jensen_digest("jensen_lower", f, weights, operators, m, M);
  return rep;
}

} // namespace loewner
