#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loewner/inequalities.hpp"
#include "loewner/interval.hpp"
#include "loewner/rng.hpp"
#include "loewner/sym_matrix.hpp"

namespace loewner {

struct GeneratorSpec {
  int dim = 2;
  Interval spectrum_interval{1.0, 2.0};
  uint64_t seed = 0;
  int count = 1;
};

struct Violation {
  std::string digest; // full replay record: checker, f, params, entries at 17 digits
  double margin = 0.0; // most negative eigenvalue across the violated links
};

struct HuntResult {
  long trials = 0;
  std::vector<Violation> violations;
  std::optional<double> worst_margin; // min over violations; empty when none
  long satisfying_hypothesis_count = 0;
  std::string notes;
};

/// Margin below -kHuntViolationRelTol * ||RHS - LHS||_F counts as a violation.
inline constexpr double kHuntViolationRelTol = 1e-8;

/// Random orthogonal matrix: orthonormalized standard normal samples.
std::vector<double> random_orthogonal(int dim, SplitMix64& rng);

/// Symmetric matrix with iid N(0,1) off-diagonals (test utility).
SymMatrix random_symmetric_gaussian(int dim, SplitMix64& rng);

/// Q diag(lambda) Q^T with lambda uniform in the spectrum interval and Q a
/// random orthogonal matrix; one matrix per trial substream of spec.seed.
std::vector<SymMatrix> random_symmetric_with_spectrum(const GeneratorSpec& spec);

/// (A, B) whose tight spectral intervals satisfy the thm1 condition at v
/// with margin >= gap. Interval placement is searched inside [1e-2, 1e2];
/// throws InfeasibleConstruction when no placement fits (v near 0 or 1).
std::pair<SymMatrix, SymMatrix> conforming_pair(double v, double gap, int dim, uint64_t seed);

/// Seeded randomized search for violations of one inequality checker.
/// With require_hypothesis the instances are constructed to satisfy the
/// checker's hypothesis (expected violations: zero); without it both
/// operators are drawn from the same spectrum interval.
HuntResult hunt_violations(const std::string& checker_id, const ScalarFunction& f,
                           const GeneratorSpec& spec, bool require_hypothesis, double v = 0.5,
                           Exec exec = Exec::Parallel);

/// Randomized satisfiability probe for a named hypothesis over tuples
/// (n, N, m, M, v) drawn log-uniformly from [1e-2, 1e2]. condition_id in
/// {thm1, thm2, hh, sandwich}. The hh probe tests the exact all-v condition;
/// the grid-sampled window count is kept in the notes as a diagnostic.
HuntResult probe_hypothesis_satisfiability(const std::string& condition_id, long samples,
                                           uint64_t seed, Exec exec = Exec::Parallel);

} // namespace loewner
