#pragma once

#include "loewner/reports.hpp"

namespace loewner {

/// Gaps at or below this absolute slack count as touching, not disjoint;
/// the paper's empty-intersection hypotheses mean strict separation.
inline constexpr double kDisjointSlack = 1e-12;

/// Tightest admissible (n, N) for an operator: its spectral interval.
Interval operator_bounds(const SymMatrix& a);

/// [n nabla_v m, N nabla_v M] disjoint from both [n,N] and [m,M], 0 < v < 1.
HypothesisReport thm1_condition(const Interval& nN, const Interval& mM, double v);

/// For v >= 1: [N nabla_v m, n nabla_v M] disjoint from [m,M] and
/// containing [n,N].
HypothesisReport thm2_condition(const Interval& nN, const Interval& mM, double v);

/// thm1_condition sampled at v = i/(grid+1), i = 1..grid; reports the
/// contiguous sub-window of sampled v where the condition holds.
HypothesisReport hh_condition(const Interval& nN, const Interval& mM, int grid);

/// 0 < m <= 2n and 2N <= M.
HypothesisReport sandwich_condition(double m, const Interval& nN, double M);

/// 0 < m <= ell*n and ell*N <= M; ell = 2 reduces to sandwich_condition.
HypothesisReport ell_sandwich_condition(double m, const Interval& nN, double M, int ell);

/// Exact satisfiability of the Hermite-Hadamard hypothesis quantified over
/// all v in (0,1): as v -> 0+ the mean interval converges to [n,N] and as
/// v -> 1- to [m,M], so the condition is satisfiable only when both
/// intervals are degenerate (and distinct points).
bool hh_condition_all_v_satisfiable(const Interval& nN, const Interval& mM);

} // namespace loewner
