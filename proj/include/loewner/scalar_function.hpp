#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "loewner/error.hpp"

namespace loewner {

enum class FunctionFamily { Power, Log, Exp, InverseShift, Affine };

/// Evaluation domain: an interval or half-line with open/closed endpoints.
struct FunctionDomain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double t) const {
    if (lo_open ? !(t > lo) : !(t >= lo))
      return false;
    if (hi_open ? !(t < hi) : !(t <= hi))
      return false;
    return true;
  }

  static FunctionDomain real_line() { return {}; }
  static FunctionDomain positive_half() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }
  static FunctionDomain nonnegative_half() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }

  std::string describe() const;
};

/// Analytic flags declared at registration from the closed-form family
/// tables. Operator-level flags are trusted metadata (deciding them
/// numerically is out of reach); scalar flags are audit-checkable.
struct FunctionFlags {
  bool convex_on_domain = false;
  bool concave_on_domain = false;
  bool operator_monotone_increasing = false;
  bool operator_monotone_decreasing = false;
  bool operator_convex = false;
  bool operator_concave = false;
  bool doubling = false; // f(2t) <= 2 f(t) on the domain
  std::optional<double> value_at_zero;
};

class ScalarFunction {
public:
  static ScalarFunction power(double r);
  static ScalarFunction log();
  static ScalarFunction exp();
  static ScalarFunction inverse_shift(double s);
  static ScalarFunction affine(double p, double q);

  double eval(double t) const;           // throws DomainViolation outside the domain
  double eval_unchecked(double t) const; // raw formula, no domain check

  FunctionFamily family() const { return family_; }
  const FunctionDomain& domain() const { return domain_; }
  const FunctionFlags& flags() const { return flags_; }
  double param_a() const { return a_; } // r | s | p
  double param_b() const { return b_; } // unused | unused | q

  /// CLI spec string, e.g. "power:2", "inverse_shift:1", "affine:1,0".
  std::string spec_string() const;

private:
  ScalarFunction(FunctionFamily fam, double a, double b, FunctionDomain dom, FunctionFlags flags)
      : family_(fam), a_(a), b_(b), domain_(dom), flags_(flags) {}

  FunctionFamily family_;
  double a_ = 0.0;
  double b_ = 0.0;
  FunctionDomain domain_;
  FunctionFlags flags_;
};

/// Chord of f through (a, f(a)) and (b, f(b)) evaluated at t:
/// ((b-t) f(a) + (t-a) f(b)) / (b-a).
double secant(const ScalarFunction& f, double a, double b, double t);

struct AuditReport {
  int samples = 0;
  int convexity_contradictions = 0;
  int concavity_contradictions = 0;
  int monotonicity_contradictions = 0;
  double worst_violation = 0.0; // most negative slack seen against a declared flag
  bool consistent = true;
};

/// Sample-based audit of the declared *scalar* flags (midpoint convexity /
/// concavity, monotonicity implied by the operator-monotone flags).
/// Report-only; never modifies flags.
AuditReport audit_flags(const ScalarFunction& f, int samples, uint64_t seed);

} // namespace loewner
