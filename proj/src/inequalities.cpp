#include "loewner/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "loewner/digest.hpp"
#include "loewner/eigen.hpp"

namespace loewner {

LoewnerVerdict conjunction(const std::vector<ChainLink>& links) {
  LoewnerVerdict out;
  out.relation = Relation::Equal;
  out.min_eig_of_difference = std::numeric_limits<double>::infinity();
  out.max_eig_of_difference = -std::numeric_limits<double>::infinity();
  if (links.empty()) {
    out.min_eig_of_difference = out.max_eig_of_difference = 0.0;
    return out;
  }
  bool all_ge = true, all_le = true, all_eq = true;
  for (const ChainLink& link : links) {
    all_ge = all_ge && link.verdict.at_least();
    all_le = all_le && link.verdict.at_most();
    all_eq = all_eq && link.verdict.relation == Relation::Equal;
    out.min_eig_of_difference =
        std::min(out.min_eig_of_difference, link.verdict.min_eig_of_difference);
    out.max_eig_of_difference =
        std::max(out.max_eig_of_difference, link.verdict.max_eig_of_difference);
    out.tolerance_used = std::max(out.tolerance_used, link.verdict.tolerance_used);
  }
  out.relation = all_eq          ? Relation::Equal
                 : all_ge        ? Relation::GreaterOrEqual
                 : all_le        ? Relation::LessOrEqual
                                 : Relation::Incomparable;
  return out;
}

namespace {

std::string pair_digest(const char* tag, const std::string& fspec, double p1, double p2,
                        const SymMatrix& a, const SymMatrix& b) {
  std::string payload = tag;
  payload += "|" + fspec + "|";
  append_number(payload, p1);
  append_number(payload, p2);
  append_matrix(payload, a);
  append_matrix(payload, b);
  return hex64(fnv1a64(payload));
}

// Direction by scalar flags: convex claims f(mean) <= mean of f,
// concave claims the reverse. Affine functions take the convex branch.
bool pick_convex_direction(const ScalarFunction& f, const char* who) {
  if (f.flags().convex_on_domain)
    return true;
  if (f.flags().concave_on_domain)
    return false;
  fail(ErrorCode::FlagMissing,
       std::string(who) + " needs a function flagged convex or concave, got " + f.spec_string());
}

HypothesisReport disjoint_midpoint_condition(const SymMatrix& a, const SymMatrix& b) {
  const Interval tau_a = spectral_interval(a);
  const Interval tau_b = spectral_interval(b);
  const Interval tau_mid = spectral_interval(arithmetic_mean(a, b, 0.5));

  auto strict = [](double x) {
    return x > 0.0 ? x : std::min(x, -std::numeric_limits<double>::min());
  };
  const double gap_a = strict(interval_gap(tau_mid, tau_a) - kDisjointSlack);
  const double gap_b = strict(interval_gap(tau_mid, tau_b) - kDisjointSlack);

  HypothesisReport rep;
  rep.condition_name = "power_disjoint_spectra";
  rep.intervals = {{"tau_A", tau_a}, {"tau_B", tau_b}, {"tau_mid", tau_mid}};
  rep.sub_margins = {{"gap_mid_A", gap_a}, {"gap_mid_B", gap_b}};
  rep.margin = std::min(gap_a, gap_b);
  rep.holds = rep.margin >= 0.0;
  return rep;
}

} // namespace

std::pair<double, double> auto_sandwich_bounds(const SymMatrix& a, const SymMatrix& b) {
  const Interval bounds = hull(spectral_interval(a), spectral_interval(b));
  return {2.0 * bounds.lo, 2.0 * bounds.hi};
}

InequalityReport check_thm1(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                            double v, std::optional<BoundsOverride> bounds, double rel_tol) {
  require_same_dim(a, b, "check_thm1");
  const bool convex = pick_convex_direction(f, "check_thm1");

  const Interval nN = bounds ? bounds->nN : operator_bounds(a);
  const Interval mM = bounds ? bounds->mM : operator_bounds(b);

  InequalityReport rep;
  rep.theorem_id = "thm1";
  rep.hypothesis = thm1_condition(nN, mM, v);

  const SymMatrix f_mean = apply_function(f, arithmetic_mean(a, b, v));
  const SymMatrix mean_f = arithmetic_mean(apply_function(f, a), apply_function(f, b), v);
  rep.lhs = convex ? f_mean : mean_f;
  rep.rhs = convex ? mean_f : f_mean;
  rep.verdict = loewner_compare(rep.rhs, rep.lhs, rel_tol);
  rep.notes = convex ? "claim: f(A nabla_v B) <= f(A) nabla_v f(B)"
                     : "claim (concave reverse): f(A) nabla_v f(B) <= f(A nabla_v B)";
  rep.input_digest = pair_digest("thm1", f.spec_string(), v, 0.0, a, b);
  return rep;
}

InequalityReport check_thm2(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                            double v, std::optional<BoundsOverride> bounds, double rel_tol) {
  require_same_dim(a, b, "check_thm2");
  const bool convex = pick_convex_direction(f, "check_thm2");

  const Interval nN = bounds ? bounds->nN : operator_bounds(a);
  const Interval mM = bounds ? bounds->mM : operator_bounds(b);

  InequalityReport rep;
  rep.theorem_id = "thm2";
  rep.hypothesis = thm2_condition(nN, mM, v);

  // For v > 1 the mean can leave the domain of f; that surfaces as a
  // DomainViolation, which is the expected outcome for such inputs.
  const SymMatrix f_mean = apply_function(f, arithmetic_mean(a, b, v));
  const SymMatrix mean_f = arithmetic_mean(apply_function(f, a), apply_function(f, b), v);
  rep.lhs = convex ? f_mean : mean_f;
  rep.rhs = convex ? mean_f : f_mean;
  rep.verdict = loewner_compare(rep.rhs, rep.lhs, rel_tol);
  rep.notes = convex ? "claim: f(A nabla_v B) <= f(A) nabla_v f(B), v >= 1"
                     : "claim (concave reverse), v >= 1";
  rep.input_digest = pair_digest("thm2", f.spec_string(), v, 0.0, a, b);
  return rep;
}

InequalityReport check_subadditivity_double(const ScalarFunction& f, const SymMatrix& a,
                                            const SymMatrix& b, double rel_tol) {
  require_same_dim(a, b, "check_subadditivity_double");
  if (!f.flags().convex_on_domain)
    fail(ErrorCode::FlagMissing, "check_subadditivity_double needs a convex function");

  const Interval tau_2a(2.0 * operator_bounds(a).lo, 2.0 * operator_bounds(a).hi);
  const Interval tau_2b(2.0 * operator_bounds(b).lo, 2.0 * operator_bounds(b).hi);

  InequalityReport rep;
  rep.theorem_id = "subadditivity_double";
  rep.hypothesis = thm1_condition(tau_2a, tau_2b, 0.5);

  const SymMatrix sum = a + b;
  const SymMatrix lhs1 = 2.0 * apply_function(f, sum);
  const SymMatrix rhs1 = apply_function(f, 2.0 * a) + apply_function(f, 2.0 * b);
  rep.chain_links.push_back(
      {"2f(A+B) <= f(2A)+f(2B)", lhs1, rhs1, loewner_compare(rhs1, lhs1, rel_tol)});

  if (f.flags().doubling) {
    const SymMatrix lhs2 = apply_function(f, sum);
    const SymMatrix rhs2 = apply_function(f, a) + apply_function(f, b);
    rep.chain_links.push_back(
        {"f(A+B) <= f(A)+f(B)", lhs2, rhs2, loewner_compare(rhs2, lhs2, rel_tol)});
  } else {
    rep.notes = "doubling flag absent; second link skipped";
  }

  rep.lhs = lhs1;
  rep.rhs = rhs1;
  rep.verdict = conjunction(rep.chain_links);
  rep.input_digest = pair_digest("subadditivity_double", f.spec_string(), 0.0, 0.0, a, b);
  return rep;
}

InequalityReport check_power(double r, const SymMatrix& a, const SymMatrix& b, double rel_tol) {
  require_same_dim(a, b, "check_power");

  InequalityReport rep;
  rep.theorem_id = "power";
  rep.hypothesis = disjoint_midpoint_condition(a, b);

  const SymMatrix scaled_sum_pow = std::exp2(1.0 - r) * matrix_power(a + b, r);
  const SymMatrix power_sum = matrix_power(a, r) + matrix_power(b, r);

  const bool reversed = (r >= 0.0 && r <= 1.0);
  rep.lhs = reversed ? power_sum : scaled_sum_pow;
  rep.rhs = reversed ? scaled_sum_pow : power_sum;
  rep.verdict = loewner_compare(rep.rhs, rep.lhs, rel_tol);
  rep.notes = reversed ? "claim: A^r + B^r <= 2^{1-r} (A+B)^r, r in [0,1]"
                       : "claim: 2^{1-r} (A+B)^r <= A^r + B^r, r > 1 or r < 0";
  rep.input_digest = pair_digest("power", "power", r, 0.0, a, b);
  return rep;
}

InequalityReport check_hh_chain(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b,
                                int nodes, double rel_tol) {
  require_same_dim(a, b, "check_hh_chain");
  if (!f.flags().convex_on_domain)
    fail(ErrorCode::FlagMissing, "check_hh_chain needs a convex function");

  InequalityReport rep;
  rep.theorem_id = "hh_chain";
  rep.hypothesis = hh_condition(operator_bounds(a), operator_bounds(b), 99);

  const QuadratureResult quad = hh_integral_mean_detail(f, a, b, nodes);
  if (quad.refinement_delta > kQuadRefinementTol)
    fail(ErrorCode::QuadratureNotConverged,
         "refinement delta " + std::to_string(quad.refinement_delta));

  const SymMatrix mid = apply_function(f, arithmetic_mean(a, b, 0.5));
  const SymMatrix avg = arithmetic_mean(apply_function(f, a), apply_function(f, b), 0.5);
  rep.chain_links.push_back({"f((A+B)/2) <= int f(A nabla_v B) dv", mid, quad.value,
                             loewner_compare(quad.value, mid, rel_tol)});
  rep.chain_links.push_back({"int f(A nabla_v B) dv <= (f(A)+f(B))/2", quad.value, avg,
                             loewner_compare(avg, quad.value, rel_tol)});

  rep.lhs = mid;
  rep.rhs = avg;
  rep.verdict = conjunction(rep.chain_links);
  rep.notes = "quadrature refinement delta = " + std::to_string(quad.refinement_delta) +
              "; the all-v hypothesis is unsatisfiable for nondegenerate spectra, the sampled "
              "v-window is reported instead";
  rep.input_digest = pair_digest("hh_chain", f.spec_string(), nodes, 0.0, a, b);
  return rep;
}

InequalityReport check_decreasing_chain(const ScalarFunction& f, const SymMatrix& a,
                                        const SymMatrix& b, double rel_tol) {
  require_same_dim(a, b, "check_decreasing_chain");
  if (!f.flags().operator_monotone_decreasing)
    fail(ErrorCode::FlagMissing,
         "check_decreasing_chain needs an operator monotone decreasing function");
  if (!is_strictly_positive(a) || !is_strictly_positive(b))
    fail(ErrorCode::NotStrictlyPositive, "check_decreasing_chain needs strictly positive A, B");

  const SymMatrix f_sum = apply_function(f, a + b);
  const SymMatrix f_mean = apply_function(f, arithmetic_mean(a, b, 0.5));
  const SymMatrix f_a = apply_function(f, a);
  const SymMatrix f_b = apply_function(f, b);
  const SymMatrix geo = geometric_mean(f_a, f_b, 0.5);

  InequalityReport rep;
  rep.theorem_id = "decreasing_chain";

  const SymMatrix l1 = 2.0 * f_sum, r1 = 2.0 * f_mean;
  const SymMatrix r2 = 2.0 * geo;
  const SymMatrix r3 = f_a + f_b;
  rep.chain_links.push_back({"2f(A+B) <= 2f(A nabla B)", l1, r1, loewner_compare(r1, l1, rel_tol)});
  rep.chain_links.push_back(
      {"2f(A nabla B) <= 2(f(A) # f(B))", r1, r2, loewner_compare(r2, r1, rel_tol)});
  rep.chain_links.push_back(
      {"2(f(A) # f(B)) <= f(A)+f(B)", r2, r3, loewner_compare(r3, r2, rel_tol)});

  rep.lhs = l1;
  rep.rhs = r3;
  rep.verdict = conjunction(rep.chain_links);
  const LoewnerVerdict weak = loewner_compare(r3, l1, rel_tol);
  rep.notes = std::string("derived end-to-end 2f(A+B) <= f(A)+f(B): ") +
              relation_name(weak.relation) +
              " (min eig " + std::to_string(weak.min_eig_of_difference) + ")";
  rep.input_digest = pair_digest("decreasing_chain", f.spec_string(), 0.0, 0.0, a, b);
  return rep;
}

InequalityReport check_reverse_subadditivity(const ScalarFunction& f, const SymMatrix& a,
                                             const SymMatrix& b, double m, double M,
                                             double rel_tol) {
  require_same_dim(a, b, "check_reverse_subadditivity");
  if (!f.flags().operator_monotone_decreasing)
    fail(ErrorCode::FlagMissing,
         "check_reverse_subadditivity needs an operator monotone decreasing function");

  const Interval bounds = hull(operator_bounds(a), operator_bounds(b));
  HypothesisReport hyp = sandwich_condition(m, bounds, M);
  if (!hyp.holds)
    fail(ErrorCode::HypothesisFailed,
         "sandwich 0 < m <= 2n <= 2N <= M violated by " + std::to_string(-hyp.margin));

  const RatioConstant k = big_K(m, M, f);
  const SymMatrix lhs = apply_function(f, a) + apply_function(f, b);
  const SymMatrix rhs = 4.0 * k.value * apply_function(f, a + b);

  InequalityReport rep;
  rep.theorem_id = "reverse_subadditivity";
  rep.hypothesis = hyp;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.verdict = loewner_compare(rhs, lhs, rel_tol);
  rep.notes = "K(" + std::to_string(m) + "," + std::to_string(M) + ",f) = " +
              std::to_string(k.value) + " at t = " + std::to_string(k.argmax_or_argmin);
  rep.input_digest = pair_digest("reverse_subadditivity", f.spec_string(), m, M, a, b);
  return rep;
}

InequalityReport check_concave_lower(const ScalarFunction& f, const SymMatrix& a,
                                     const SymMatrix& b, double m, double M, double rel_tol) {
  require_same_dim(a, b, "check_concave_lower");
  if (!f.flags().operator_concave)
    fail(ErrorCode::FlagMissing, "check_concave_lower needs an operator concave function");

  const Interval bounds = hull(operator_bounds(a), operator_bounds(b));
  HypothesisReport hyp = sandwich_condition(m, bounds, M);
  if (!hyp.holds)
    fail(ErrorCode::HypothesisFailed,
         "sandwich 0 < m <= 2n <= 2N <= M violated by " + std::to_string(-hyp.margin));

  const RatioConstant k = small_k(m, M, f);
  const SymMatrix lhs = k.value * apply_function(f, a + b);
  const SymMatrix rhs = apply_function(f, a) + apply_function(f, b);

  InequalityReport rep;
  rep.theorem_id = "concave_lower";
  rep.hypothesis = hyp;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.verdict = loewner_compare(rhs, lhs, rel_tol);
  rep.notes = "k(" + std::to_string(m) + "," + std::to_string(M) + ",f) = " +
              std::to_string(k.value) + " at t = " + std::to_string(k.argmax_or_argmin);
  rep.input_digest = pair_digest("concave_lower", f.spec_string(), m, M, a, b);
  return rep;
}

InequalityReport check_ell_sum(const ScalarFunction& f, const std::vector<SymMatrix>& operators,
                               double m, double M, EllSumMode mode, double rel_tol) {
  if (operators.empty())
    fail(ErrorCode::InvalidArgument, "check_ell_sum needs at least one operator");
  const int ell = static_cast<int>(operators.size());
  const int dim = operators.front().dim();

  Interval bounds = operator_bounds(operators.front());
  for (size_t i = 1; i < operators.size(); ++i) {
    require_same_dim(operators.front(), operators[i], "check_ell_sum");
    bounds = hull(bounds, operator_bounds(operators[i]));
  }

  HypothesisReport hyp = ell_sandwich_condition(m, bounds, M, ell);
  if (!hyp.holds)
    fail(ErrorCode::HypothesisFailed,
         "ell-sandwich m <= ell*n <= ell*N <= M violated by " + std::to_string(-hyp.margin));

  SymMatrix sum = SymMatrix::zero(dim);
  SymMatrix f_sum_terms = SymMatrix::zero(dim);
  for (const SymMatrix& op : operators) {
    sum = sum + op;
    f_sum_terms = f_sum_terms + apply_function(f, op);
  }

  InequalityReport rep;
  rep.hypothesis = hyp;
  if (mode == EllSumMode::ConcaveLower) {
    if (!f.flags().operator_concave)
      fail(ErrorCode::FlagMissing, "ell_sum concave_lower needs an operator concave function");
    const RatioConstant k = small_k(m, M, f);
    rep.theorem_id = "ell_sum_concave_lower";
    rep.lhs = apply_function(f, sum);
    rep.rhs = (1.0 / k.value) * f_sum_terms;
    rep.notes = "claim: f(sum A_i) <= (1/k) sum f(A_i), k = " + std::to_string(k.value);
  } else {
    if (!f.flags().operator_monotone_decreasing)
      fail(ErrorCode::FlagMissing,
           "ell_sum decreasing_upper needs an operator monotone decreasing function");
    const RatioConstant k = big_K(m, M, f);
    rep.theorem_id = "ell_sum_decreasing_upper";
    rep.lhs = (1.0 / (static_cast<double>(ell) * ell * k.value)) * f_sum_terms;
    rep.rhs = apply_function(f, sum);
    rep.notes =
        "claim: (1/(ell^2 K)) sum f(A_i) <= f(sum A_i), K = " + std::to_string(k.value);
  }
  rep.verdict = loewner_compare(rep.rhs, rep.lhs, rel_tol);

  std::string payload = rep.theorem_id + "|" + f.spec_string() + "|";
  append_number(payload, m);
  append_number(payload, M);
  for (const SymMatrix& op : operators)
    append_matrix(payload, op);
  rep.input_digest = hex64(fnv1a64(payload));
  return rep;
}

InequalityReport check_K_k_subadditivity(const ScalarFunction& f, const SymMatrix& a,
                                         const SymMatrix& b, double m, double M, double rel_tol) {
  require_same_dim(a, b, "check_K_k_subadditivity");
  if (!(0.0 < m && m < M))
    fail(ErrorCode::DegenerateInterval, "check_K_k_subadditivity needs 0 < m < M");

  const Interval tau_a = operator_bounds(a);
  const Interval tau_b = operator_bounds(b);
  const double slack = 1e-12 * std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
  if (std::min(tau_a.lo, tau_b.lo) < m - slack || std::max(tau_a.hi, tau_b.hi) > M + slack)
    fail(ErrorCode::SpectraOutOfBounds, "spectra of A, B must lie in [m,M]");

  const bool convex_branch = f.flags().convex_on_domain && f.flags().value_at_zero &&
                             *f.flags().value_at_zero == 0.0;
  if (!convex_branch && !f.flags().concave_on_domain) {
    if (f.flags().convex_on_domain)
      fail(ErrorCode::ZeroValueViolation,
           "convex branch needs f(0) = 0, got " + f.spec_string());
    fail(ErrorCode::FlagMissing, "needs a convex (f(0)=0) or concave function");
  }

  // f(A+B) lives on spectra up to 2M, beyond the paper's stated [0, M].
  if (!f.domain().contains(2.0 * M) || !f.domain().contains(m))
    fail(ErrorCode::DomainViolation,
         "domain of " + f.spec_string() + " must cover [m, 2M] for f(A+B)");

  const SymMatrix f_sum = apply_function(f, a + b);
  const SymMatrix f_parts = apply_function(f, a) + apply_function(f, b);

  InequalityReport rep;
  rep.theorem_id = "K_k_subadditivity";
  if (convex_branch) {
    const RatioConstant k = big_K(m, M, f);
    rep.lhs = f_parts;
    rep.rhs = k.value * f_sum;
    rep.notes = "convex branch: f(A)+f(B) <= K f(A+B), K = " + std::to_string(k.value) +
                "; note f(A+B) is evaluated on [2m,2M] while K is built on [m,M]";
  } else {
    const RatioConstant k = small_k(m, M, f);
    rep.lhs = k.value * f_sum;
    rep.rhs = f_parts;
    rep.notes = "concave branch: k f(A+B) <= f(A)+f(B), k = " + std::to_string(k.value) +
                "; note f(A+B) is evaluated on [2m,2M] while k is built on [m,M]";
  }
  rep.verdict = loewner_compare(rep.rhs, rep.lhs, rel_tol);
  rep.input_digest = pair_digest("K_k_subadditivity", f.spec_string(), m, M, a, b);
  return rep;
}

InnerJensenReport check_inner_jensen(const ScalarFunction& f, const SymMatrix& a,
                                     const std::vector<double>& x, double m, double M) {
  if (static_cast<int>(x.size()) != a.dim())
    fail(ErrorCode::DimensionMismatch, "check_inner_jensen: vector length mismatch");
  double norm2 = 0.0;
  for (double xi : x)
    norm2 += xi * xi;
  if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-12)
    fail(ErrorCode::NotUnitVector, "||x|| = " + std::to_string(std::sqrt(norm2)));

  const Interval tau = operator_bounds(a);
  const double slack = 1e-12 * std::max(1.0, a.frobenius_norm());
  if (tau.lo < m - slack || tau.hi > M + slack)
    fail(ErrorCode::SpectraOutOfBounds, "spectrum not inside [m,M]");

  InnerJensenReport rep;
  rep.bra_A_ket = quadratic_form(a, x);
  rep.bra_fA_ket = quadratic_form(apply_function(f, a), x);
  const double f_of_bra = f.eval(rep.bra_A_ket);

  auto add = [&rep](const std::string& label, double lhs, double rhs) {
    const double tol = 1e-9 * (1.0 + std::fabs(lhs) + std::fabs(rhs));
    rep.checks.push_back({label, lhs, rhs, rhs - lhs, rhs - lhs >= -tol});
  };

  if (f.flags().convex_on_domain) {
    add("jensen (convex): f(<Ax,x>) <= <f(A)x,x>", f_of_bra, rep.bra_fA_ket);
    const RatioConstant k = big_K(m, M, f);
    add("reverse (convex): <f(A)x,x> <= K f(<Ax,x>)", rep.bra_fA_ket, k.value * f_of_bra);
  }
  if (f.flags().concave_on_domain) {
    add("jensen (concave): <f(A)x,x> <= f(<Ax,x>)", rep.bra_fA_ket, f_of_bra);
    const RatioConstant k = small_k(m, M, f);
    add("reverse (concave, as printed): f(<Ax,x>) <= k <f(A)x,x>", f_of_bra,
        k.value * rep.bra_fA_ket);
    add("reverse (concave, alternative orientation): k <f(A)x,x> <= f(<Ax,x>)",
        k.value * rep.bra_fA_ket, f_of_bra);
    rep.notes = "the printed concave reverse conflicts numerically with simple examples; both "
                "orientations are reported without asserting intent";
  }
  if (rep.checks.empty())
    fail(ErrorCode::FlagMissing, "check_inner_jensen needs a convex or concave function");
  return rep;
}

} // namespace loewner
