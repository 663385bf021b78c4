#include "loewner/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "loewner/digest.hpp"
#include "loewner/eigen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loewner {

namespace {

// Search box for interval placement in conforming_pair and for the
// satisfiability probes.
constexpr double kBoxLo = 1e-2;
constexpr double kBoxHi = 1e2;

void run_indexed(long count, Exec exec, const std::function<void(long)>& body) {
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i)
      body(i);
    return;
#endif
  }
  for (long i = 0; i < count; ++i)
    body(i);
}

} // namespace

std::vector<double> random_orthogonal(int dim, SplitMix64& rng) {
  std::vector<double> q(static_cast<size_t>(dim) * dim);
  for (int col = 0; col < dim; ++col) {
    // Draw a fresh column until Gram-Schmidt leaves a usable remainder
    // (degeneracy has probability zero; the retry guards rounding).
    for (;;) {
      for (int i = 0; i < dim; ++i)
        q[static_cast<size_t>(i) * dim + col] = rng.normal();
      for (int prev = 0; prev < col; ++prev) {
        double dot = 0.0;
        for (int i = 0; i < dim; ++i)
          dot += q[static_cast<size_t>(i) * dim + col] * q[static_cast<size_t>(i) * dim + prev];
        for (int i = 0; i < dim; ++i)
          q[static_cast<size_t>(i) * dim + col] -= dot * q[static_cast<size_t>(i) * dim + prev];
      }
      double norm2 = 0.0;
      for (int i = 0; i < dim; ++i)
        norm2 += q[static_cast<size_t>(i) * dim + col] * q[static_cast<size_t>(i) * dim + col];
      if (norm2 > 1e-12) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < dim; ++i)
          q[static_cast<size_t>(i) * dim + col] *= inv;
        break;
      }
    }
  }
  return q;
}

SymMatrix random_symmetric_gaussian(int dim, SplitMix64& rng) {
  std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const double g = rng.normal();
      e[static_cast<size_t>(i) * dim + j] = g;
      e[static_cast<size_t>(j) * dim + i] = g;
    }
  return SymMatrix(dim, e);
}

namespace {

SymMatrix planted_spectrum_matrix(int dim, const Interval& spectrum, SplitMix64& rng) {
  std::vector<double> lambda(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    lambda[static_cast<size_t>(i)] = rng.uniform(spectrum.lo, spectrum.hi);
  const std::vector<double> q = random_orthogonal(dim, rng);

  // Fixed reduction order (k ascending, upper triangle mirrored) keeps the
  // output bit-for-bit reproducible for a given seed.
  std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double s = 0.0;
      for (int k = 0; k < dim; ++k)
        s += q[static_cast<size_t>(i) * dim + k] * lambda[static_cast<size_t>(k)] *
             q[static_cast<size_t>(j) * dim + k];
      e[static_cast<size_t>(i) * dim + j] = s;
      e[static_cast<size_t>(j) * dim + i] = s;
    }
  return SymMatrix(dim, e);
}

} // namespace

std::vector<SymMatrix> random_symmetric_with_spectrum(const GeneratorSpec& spec) {
  if (spec.dim < 1)
    fail(ErrorCode::InvalidArgument, "generator dim must be >= 1");
  if (!(spec.spectrum_interval.lo > 0.0))
    fail(ErrorCode::InvalidInterval, "generator spectrum interval needs lo > 0");
  if (spec.count < 1)
    fail(ErrorCode::InvalidArgument, "generator count must be >= 1");

  std::vector<SymMatrix> out;
  out.reserve(static_cast<size_t>(spec.count));
  for (int t = 0; t < spec.count; ++t) {
    SplitMix64 rng(spec.seed, static_cast<uint64_t>(t));
    out.push_back(planted_spectrum_matrix(spec.dim, spec.spectrum_interval, rng));
  }
  return out;
}

std::pair<SymMatrix, SymMatrix> conforming_pair(double v, double gap, int dim, uint64_t seed) {
  if (!(v > 0.0 && v < 1.0))
    fail(ErrorCode::WeightOutOfRange, "conforming_pair needs 0 < v < 1");
  if (!(gap > 0.0))
    fail(ErrorCode::InvalidArgument, "conforming_pair needs gap > 0");
  if (dim < 1)
    fail(ErrorCode::InvalidArgument, "conforming_pair needs dim >= 1");

  // Place [m,M] above [n,N] so that J = [n nabla_v m, N nabla_v M] separates
  // from both by at least `gap`:
  //   (1-v) n + v m >= N + gap        (J above [n,N])
  //   (1-v) N + v M <= m - gap        (J below [m,M])
  // Shrinking widths rescues extreme v until the box runs out.
  std::string attempts;
  for (double w : {3.0, 1.0, 0.3, 0.1, 0.03, 0.01}) {
    const double n = 2.5, N = n + w;
    const double w2 = 0.8 * w;
    const double need1 = (N + gap - (1.0 - v) * n) / v;
    const double need2 = N + (gap + v * w2) / (1.0 - v);
    const double m = std::max(need1, need2) + 0.01 * (1.0 + w);
    const double M = m + w2;
    if (M <= kBoxHi) {
      SplitMix64 rng_a(seed, 0), rng_b(seed, 1);
      SymMatrix a = planted_spectrum_matrix(dim, Interval(n, N), rng_a);
      SymMatrix b = planted_spectrum_matrix(dim, Interval(m, M), rng_b);
      return {std::move(a), std::move(b)};
    }
    attempts += " w=" + std::to_string(w) + " -> m_min=" + std::to_string(std::max(need1, need2));
  }
  fail(ErrorCode::InfeasibleConstruction,
       "no interval placement inside [1e-2, 1e2] separates both sides for v = " +
           std::to_string(v) + ", gap = " + std::to_string(gap) + ";" + attempts);
}

namespace {

struct TrialOutcome {
  bool violated = false;
  bool hypothesis_holds = false;
  double margin = 0.0;
  std::string digest;
};

// Most negative eigenvalue across the report's links measured against the
// per-link violation floor; also the absolute margin recorded in digests.
std::pair<bool, double> classify_report(const InequalityReport& rep) {
  double worst = std::numeric_limits<double>::infinity();
  bool violated = false;
  auto consider = [&](const SymMatrix& lhs, const SymMatrix& rhs, const LoewnerVerdict& v) {
    const double scale = (rhs - lhs).frobenius_norm();
    worst = std::min(worst, v.min_eig_of_difference);
    if (v.min_eig_of_difference < -kHuntViolationRelTol * scale)
      violated = true;
  };
  if (rep.chain_links.empty())
    consider(rep.lhs, rep.rhs, rep.verdict);
  else
    for (const ChainLink& link : rep.chain_links)
      consider(link.lhs, link.rhs, link.verdict);
  return {violated, worst};
}

} // namespace

HuntResult hunt_violations(const std::string& checker_id, const ScalarFunction& f,
                           const GeneratorSpec& spec, bool require_hypothesis, double v,
                           Exec exec) {
  const bool known = checker_id == "thm1" || checker_id == "thm2" ||
                     checker_id == "subadditivity_double" || checker_id == "power" ||
                     checker_id == "hh_chain" || checker_id == "decreasing_chain" ||
                     checker_id == "reverse_subadditivity" || checker_id == "concave_lower" ||
                     checker_id == "K_k_subadditivity";
  if (!known)
    fail(ErrorCode::UnknownChecker, "no checker named '" + checker_id + "'");
  if (checker_id == "power" && f.family() != FunctionFamily::Power)
    fail(ErrorCode::UnknownChecker, "checker 'power' takes a power-family function");
  if (checker_id == "thm2" && !(v >= 1.0))
    fail(ErrorCode::WeightOutOfRange, "checker 'thm2' needs v >= 1");

  const bool spectral_hypothesis = checker_id == "thm1" || checker_id == "thm2" ||
                                   checker_id == "subadditivity_double" || checker_id == "power" ||
                                   checker_id == "hh_chain";
  constexpr double kConformingGap = 0.1;

  std::vector<TrialOutcome> outcomes(static_cast<size_t>(spec.count));
  auto run_trial = [&](long t) {
    TrialOutcome& out = outcomes[static_cast<size_t>(t)];

    SymMatrix a, b;
    if (require_hypothesis && spectral_hypothesis && checker_id != "thm2") {
      const double v_construct = checker_id == "thm1" ? v : 0.5;
      std::tie(a, b) =
          conforming_pair(v_construct, kConformingGap, spec.dim, sub_seed(spec.seed, t));
    } else {
      SplitMix64 rng_a(spec.seed, 2 * static_cast<uint64_t>(t));
      SplitMix64 rng_b(spec.seed, 2 * static_cast<uint64_t>(t) + 1);
      a = planted_spectrum_matrix(spec.dim, spec.spectrum_interval, rng_a);
      b = planted_spectrum_matrix(spec.dim, spec.spectrum_interval, rng_b);
    }

    InequalityReport rep;
    if (checker_id == "thm1")
      rep = check_thm1(f, a, b, v);
    else if (checker_id == "thm2")
      rep = check_thm2(f, a, b, v);
    else if (checker_id == "subadditivity_double")
      rep = check_subadditivity_double(f, a, b);
    else if (checker_id == "power")
      rep = check_power(f.param_a(), a, b);
    else if (checker_id == "hh_chain")
      rep = check_hh_chain(f, a, b, 16);
    else if (checker_id == "decreasing_chain")
      rep = check_decreasing_chain(f, a, b);
    else {
      const auto [m, M] = checker_id == "K_k_subadditivity"
                              ? std::pair<double, double>{hull(spectral_interval(a),
                                                               spectral_interval(b)).lo,
                                                          hull(spectral_interval(a),
                                                               spectral_interval(b)).hi}
                              : auto_sandwich_bounds(a, b);
      if (checker_id == "reverse_subadditivity")
        rep = check_reverse_subadditivity(f, a, b, m, M);
      else if (checker_id == "concave_lower")
        rep = check_concave_lower(f, a, b, m, M);
      else
        rep = check_K_k_subadditivity(f, a, b, m, M);
    }

    out.hypothesis_holds = !rep.hypothesis || rep.hypothesis->holds;
    const auto [violated, margin] = classify_report(rep);
    out.violated = violated;
    out.margin = margin;
    if (violated) {
      std::string payload = checker_id + "|" + f.spec_string() + "|trial=" + std::to_string(t) +
                            "|v=";
      append_number(payload, v);
      payload += "|A=";
      append_matrix(payload, a);
      payload += "|B=";
      append_matrix(payload, b);
      out.digest = payload;
    }
  };

  run_indexed(spec.count, exec, run_trial);

  HuntResult result;
  result.trials = spec.count;
  for (const TrialOutcome& out : outcomes) {
    if (out.hypothesis_holds)
      ++result.satisfying_hypothesis_count;
    if (out.violated) {
      result.violations.push_back({out.digest, out.margin});
      result.worst_margin = result.worst_margin ? std::min(*result.worst_margin, out.margin)
                                                : out.margin;
    }
  }
  result.notes = std::string("checker=") + checker_id + " f=" + f.spec_string() +
                 (require_hypothesis ? " conforming" : " unconstrained");
  return result;
}

HuntResult probe_hypothesis_satisfiability(const std::string& condition_id, long samples,
                                           uint64_t seed, Exec exec) {
  if (condition_id != "thm1" && condition_id != "thm2" && condition_id != "hh" &&
      condition_id != "sandwich")
    fail(ErrorCode::UnknownCondition, "no condition named '" + condition_id + "'");
  if (samples < 1)
    fail(ErrorCode::InvalidArgument, "probe needs samples >= 1");

  std::vector<unsigned char> satisfied(static_cast<size_t>(samples), 0);
  std::vector<unsigned char> grid_window(static_cast<size_t>(samples), 0); // hh diagnostic

  auto run_sample = [&](long s) {
    SplitMix64 rng(seed, static_cast<uint64_t>(s));
    double n = rng.log_uniform(kBoxLo, kBoxHi);
    double N = rng.log_uniform(kBoxLo, kBoxHi);
    if (n > N)
      std::swap(n, N);
    double m = rng.log_uniform(kBoxLo, kBoxHi);
    double M = rng.log_uniform(kBoxLo, kBoxHi);
    if (m > M)
      std::swap(m, M);
    const Interval nN(n, N), mM(m, M);

    if (condition_id == "thm1") {
      const double v = rng.uniform(0.0, 1.0);
      if (v > 0.0 && v < 1.0 && thm1_condition(nN, mM, v).holds)
        satisfied[static_cast<size_t>(s)] = 1;
    } else if (condition_id == "thm2") {
      const double v = rng.uniform(1.0, 10.0);
      if (thm2_condition(nN, mM, v).holds)
        satisfied[static_cast<size_t>(s)] = 1;
    } else if (condition_id == "hh") {
      if (hh_condition_all_v_satisfiable(nN, mM))
        satisfied[static_cast<size_t>(s)] = 1;
      if (hh_condition(nN, mM, 99).holds)
        grid_window[static_cast<size_t>(s)] = 1;
    } else { // sandwich
      if (sandwich_condition(m, nN, M).holds)
        satisfied[static_cast<size_t>(s)] = 1;
    }
  };

  run_indexed(samples, exec, run_sample);

  HuntResult result;
  result.trials = samples;
  long grid_count = 0;
  for (long s = 0; s < samples; ++s) {
    result.satisfying_hypothesis_count += satisfied[static_cast<size_t>(s)];
    grid_count += grid_window[static_cast<size_t>(s)];
  }
  result.notes = "condition=" + condition_id + " box=[1e-2,1e2] log-uniform";
  if (condition_id == "hh")
    result.notes += "; exact all-v condition probed; grid99_window_count=" +
                    std::to_string(grid_count) +
                    " (tuples whose 99-point v-sample misses the v->0/v->1 violation)";
  return result;
}

} // namespace loewner
