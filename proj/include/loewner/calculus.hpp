#pragma once

#include <string>

#include "loewner/eigen.hpp"
#include "loewner/scalar_function.hpp"
#include "loewner/sym_matrix.hpp"

namespace loewner {

inline constexpr double kDefaultLoewnerRelTol = 1e-9;

enum class Relation { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

const char* relation_name(Relation r);

struct LoewnerVerdict {
  Relation relation = Relation::Incomparable;
  double min_eig_of_difference = 0.0;
  double max_eig_of_difference = 0.0;
  double tolerance_used = 0.0;

  bool at_most() const { return relation == Relation::LessOrEqual || relation == Relation::Equal; }
  bool at_least() const {
    return relation == Relation::GreaterOrEqual || relation == Relation::Equal;
  }
};

/// f(A) = V f(Lambda) V^T. Eigenvalues within 1e-12*max(1,|lambda|) of a
/// closed domain endpoint are clamped to it; open endpoints are strict.
SymMatrix apply_function(const ScalarFunction& f, const SymMatrix& a);

/// A^r. Non-negative integer exponents use exact repeated multiplication
/// (cheap and bit-faithful on integer matrices); everything else goes through
/// the functional calculus and requires a strictly positive spectrum.
SymMatrix matrix_power(const SymMatrix& a, double r);

/// Classify A - B in the Loewner order with tolerance
/// rel_tol * max(1, ||A - B||_F) on both extreme eigenvalues.
LoewnerVerdict loewner_compare(const SymMatrix& a, const SymMatrix& b,
                               double rel_tol = kDefaultLoewnerRelTol);

/// lambda_min(A) > dim * 1e-12 * ||A||_F, the numeric analogue of
/// invertibility used wherever the paper says "strictly positive".
bool is_strictly_positive(const SymMatrix& a);

} // namespace loewner
