#include "loewner/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "loewner/eigen.hpp"

namespace loewner {

namespace {

// Margin encoding for strict constraints: a value that must be > 0
// contributes itself when positive and a (possibly infinitesimal) negative
// number otherwise, so `holds == (margin >= 0)` stays exact at the boundary.
double strict_positive_margin(double x) {
  return x > 0.0 ? x : std::min(x, -std::numeric_limits<double>::min());
}

double disjointness_margin(const Interval& a, const Interval& b) {
  return strict_positive_margin(interval_gap(a, b) - kDisjointSlack);
}

} // namespace

Interval operator_bounds(const SymMatrix& a) { return spectral_interval(a); }

HypothesisReport thm1_condition(const Interval& nN, const Interval& mM, double v) {
  if (!(v > 0.0 && v < 1.0))
    fail(ErrorCode::WeightOutOfRange, "thm1 condition needs 0 < v < 1");

  const Interval mean_interval((1.0 - v) * nN.lo + v * mM.lo, (1.0 - v) * nN.hi + v * mM.hi);
  const double gap_a = disjointness_margin(mean_interval, nN);
  const double gap_b = disjointness_margin(mean_interval, mM);

  HypothesisReport rep;
  rep.condition_name = "thm1_disjoint_mean_interval";
  rep.intervals = {{"J", mean_interval}, {"nN", nN}, {"mM", mM}};
  rep.sub_margins = {{"gap_J_nN", gap_a}, {"gap_J_mM", gap_b}};
  rep.margin = std::min(gap_a, gap_b);
  rep.holds = rep.margin >= 0.0;
  return rep;
}

HypothesisReport thm2_condition(const Interval& nN, const Interval& mM, double v) {
  if (!(v >= 1.0))
    fail(ErrorCode::WeightOutOfRange, "thm2 condition needs v >= 1");

  // c = N nabla_v m <= A nabla_v B <= n nabla_v M = d for v >= 1.
  const double c = (1.0 - v) * nN.hi + v * mM.lo;
  const double d = (1.0 - v) * nN.lo + v * mM.hi;
  const Interval cd(std::min(c, d), std::max(c, d));

  const double disjoint = disjointness_margin(cd, mM);
  const double contains = std::min(nN.lo - cd.lo, cd.hi - nN.hi);

  HypothesisReport rep;
  rep.condition_name = "thm2_enclosing_mean_interval";
  rep.intervals = {{"cd", cd}, {"nN", nN}, {"mM", mM}};
  rep.sub_margins = {{"gap_cd_mM", disjoint}, {"contain_nN_in_cd", contains}};
  rep.margin = std::min(disjoint, contains);
  rep.holds = rep.margin >= 0.0;
  return rep;
}

HypothesisReport hh_condition(const Interval& nN, const Interval& mM, int grid) {
  if (grid < 2)
    fail(ErrorCode::InvalidArgument, "hh condition needs grid >= 2");

  HypothesisReport rep;
  rep.condition_name = "hh_all_v_disjoint_mean_interval";
  rep.intervals = {{"nN", nN}, {"mM", mM}};
  rep.margin = std::numeric_limits<double>::infinity();

  int best_run_start = -1, best_run_len = 0;
  int run_start = -1, run_len = 0;
  int holds_count = 0;
  for (int i = 1; i <= grid; ++i) {
    const double v = static_cast<double>(i) / (grid + 1);
    const HypothesisReport sub = thm1_condition(nN, mM, v);
    rep.margin = std::min(rep.margin, sub.margin);
    if (sub.holds) {
      ++holds_count;
      if (run_start < 0)
        run_start = i;
      ++run_len;
      if (run_len > best_run_len) {
        best_run_len = run_len;
        best_run_start = run_start;
      }
    } else {
      run_start = -1;
      run_len = 0;
    }
  }
  rep.holds = rep.margin >= 0.0;
  rep.sub_margins = {{"holding_fraction", static_cast<double>(holds_count) / grid}};
  if (best_run_len > 0) {
    const double lo = static_cast<double>(best_run_start) / (grid + 1);
    const double hi = static_cast<double>(best_run_start + best_run_len - 1) / (grid + 1);
    rep.intervals.emplace_back("v_window_holds", Interval(lo, hi));
  }
  return rep;
}

HypothesisReport sandwich_condition(double m, const Interval& nN, double M) {
  return ell_sandwich_condition(m, nN, M, 2);
}

HypothesisReport ell_sandwich_condition(double m, const Interval& nN, double M, int ell) {
  if (ell < 1)
    fail(ErrorCode::InvalidArgument, "ell_sandwich_condition needs ell >= 1");

  const double positivity = strict_positive_margin(m);
  const double lower = ell * nN.lo - m;
  const double upper = M - ell * nN.hi;

  HypothesisReport rep;
  rep.condition_name = ell == 2 ? "sandwich_m_2n_2N_M" : "ell_sandwich";
  rep.intervals = {{"nN", nN}, {"mM", Interval(std::min(m, M), std::max(m, M))}};
  rep.sub_margins = {{"m_positive", positivity},
                     {"m_below_ell_n", lower},
                     {"ell_N_below_M", upper}};
  rep.margin = std::min({positivity, lower, upper});
  rep.holds = rep.margin >= 0.0;
  return rep;
}

bool hh_condition_all_v_satisfiable(const Interval& nN, const Interval& mM) {
  if (!nN.degenerate() || !mM.degenerate())
    return false;
  return std::fabs(nN.lo - mM.lo) > kDisjointSlack;
}

} // namespace loewner
