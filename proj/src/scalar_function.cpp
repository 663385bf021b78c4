#include "loewner/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "loewner/rng.hpp"

namespace loewner {

std::string FunctionDomain::describe() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%c%g, %g%c", lo_open ? '(' : '[', lo, hi, hi_open ? ')' : ']');
  return buf;
}

ScalarFunction ScalarFunction::power(double r) {
  if (!std::isfinite(r))
    fail(ErrorCode::InvalidArgument, "power exponent must be finite");
  // Even integer powers extend to the whole line (still convex there); odd
  // and fractional ones stay on the half-line to keep the flags honest.
  const bool even_integer = r >= 0.0 && r == std::floor(r) && std::fmod(r, 2.0) == 0.0;
  FunctionDomain dom = r < 0.0       ? FunctionDomain::positive_half()
                       : even_integer ? FunctionDomain::real_line()
                                      : FunctionDomain::nonnegative_half();
  FunctionFlags fl;
  fl.convex_on_domain = (r >= 1.0 || r <= 0.0);
  fl.concave_on_domain = (r >= 0.0 && r <= 1.0);
  fl.operator_monotone_increasing = (r >= 0.0 && r <= 1.0);
  fl.operator_concave = (r >= 0.0 && r <= 1.0);
  fl.operator_convex = (r >= -1.0 && r <= 0.0) || (r >= 1.0 && r <= 2.0);
  fl.operator_monotone_decreasing = (r >= -1.0 && r <= 0.0);
  fl.doubling = (r <= 1.0); // f(2t) = 2^r f(t) <= 2 f(t) iff 2^r <= 2
  if (r > 0.0)
    fl.value_at_zero = 0.0;
  else if (r == 0.0)
    fl.value_at_zero = 1.0; // r = 0 is the constant-one function
  return ScalarFunction(FunctionFamily::Power, r, 0.0, dom, fl);
}

ScalarFunction ScalarFunction::log() {
  FunctionFlags fl;
  fl.concave_on_domain = true;
  fl.operator_monotone_increasing = true;
  fl.operator_concave = true;
  return ScalarFunction(FunctionFamily::Log, 0.0, 0.0, FunctionDomain::positive_half(), fl);
}

ScalarFunction ScalarFunction::exp() {
  FunctionFlags fl;
  fl.convex_on_domain = true; // convex but not operator convex
  fl.value_at_zero = 1.0;
  return ScalarFunction(FunctionFamily::Exp, 0.0, 0.0, FunctionDomain::real_line(), fl);
}

ScalarFunction ScalarFunction::inverse_shift(double s) {
  if (!(s >= 0.0))
    fail(ErrorCode::InvalidArgument, "inverse_shift requires s >= 0");
  FunctionDomain dom = s > 0.0 ? FunctionDomain::nonnegative_half() : FunctionDomain::positive_half();
  FunctionFlags fl;
  fl.convex_on_domain = true;
  fl.operator_monotone_decreasing = true;
  fl.operator_convex = true;
  fl.doubling = true; // non-negative and decreasing on the domain
  if (s > 0.0)
    fl.value_at_zero = 1.0 / s;
  return ScalarFunction(FunctionFamily::InverseShift, s, 0.0, dom, fl);
}

ScalarFunction ScalarFunction::affine(double p, double q) {
  FunctionFlags fl;
  fl.convex_on_domain = true;
  fl.concave_on_domain = true;
  fl.operator_convex = true;
  fl.operator_concave = true;
  fl.operator_monotone_increasing = (p >= 0.0);
  fl.operator_monotone_decreasing = (p <= 0.0);
  fl.doubling = (q >= 0.0); // f(2t) - 2 f(t) = -q
  fl.value_at_zero = q;
  return ScalarFunction(FunctionFamily::Affine, p, q, FunctionDomain::real_line(), fl);
}

double ScalarFunction::eval_unchecked(double t) const {
  switch (family_) {
  case FunctionFamily::Power:
    if (a_ == 0.0)
      return 1.0;
    if (t == 0.0 && a_ > 0.0)
      return 0.0;
    return std::pow(t, a_);
  case FunctionFamily::Log:
    return std::log(t);
  case FunctionFamily::Exp:
    return std::exp(t);
  case FunctionFamily::InverseShift:
    return 1.0 / (t + a_);
  case FunctionFamily::Affine:
    return a_ * t + b_;
  }
  fail(ErrorCode::InvalidArgument, "unknown function family");
}

double ScalarFunction::eval(double t) const {
  if (!domain_.contains(t))
    fail(ErrorCode::DomainViolation,
         "argument " + std::to_string(t) + " outside domain " + domain_.describe() + " of " +
             spec_string());
  return eval_unchecked(t);
}

std::string ScalarFunction::spec_string() const {
  char buf[96];
  switch (family_) {
  case FunctionFamily::Power:
    std::snprintf(buf, sizeof(buf), "power:%.17g", a_);
    return buf;
  case FunctionFamily::Log:
    return "log";
  case FunctionFamily::Exp:
    return "exp";
  case FunctionFamily::InverseShift:
    std::snprintf(buf, sizeof(buf), "inverse_shift:%.17g", a_);
    return buf;
  case FunctionFamily::Affine:
    std::snprintf(buf, sizeof(buf), "affine:%.17g,%.17g", a_, b_);
    return buf;
  }
  return "?";
}

double secant(const ScalarFunction& f, double a, double b, double t) {
  if (a == b)
    fail(ErrorCode::DegenerateInterval, "secant endpoints coincide");
  if (a > b)
    fail(ErrorCode::DegenerateInterval, "secant endpoints out of order");
  const double fa = f.eval(a);
  const double fb = f.eval(b);
  return ((b - t) * fa + (t - a) * fb) / (b - a);
}

AuditReport audit_flags(const ScalarFunction& f, int samples, uint64_t seed) {
  if (samples < 3)
    fail(ErrorCode::InvalidArgument, "audit_flags requires samples >= 3");

  // Bounded sampling window inside the domain; open endpoints are nudged.
  const FunctionDomain& d = f.domain();
  double lo = std::max(d.lo, -100.0);
  double hi = std::min(d.hi, 100.0);
  if (d.lo_open)
    lo += 1e-6 * std::max(1.0, std::fabs(lo));
  if (d.hi_open)
    hi -= 1e-6 * std::max(1.0, std::fabs(hi));

  SplitMix64 rng(seed);
  AuditReport rep;
  rep.samples = samples;
  const FunctionFlags& fl = f.flags();
  for (int i = 0; i < samples; ++i) {
    double t1 = rng.uniform(lo, hi);
    double t2 = rng.uniform(lo, hi);
    if (t1 > t2)
      std::swap(t1, t2);
    const double lam = rng.next_unit();
    const double mid = lam * t1 + (1.0 - lam) * t2;
    const double f1 = f.eval(t1);
    const double f2 = f.eval(t2);
    const double fm = f.eval(mid);
    const double chord = lam * f1 + (1.0 - lam) * f2;
    const double tol = 1e-9 * (1.0 + std::fabs(f1) + std::fabs(f2));

    if (fl.convex_on_domain && fm > chord + tol) {
      ++rep.convexity_contradictions;
      rep.worst_violation = std::min(rep.worst_violation, chord - fm);
    }
    if (fl.concave_on_domain && fm < chord - tol) {
      ++rep.concavity_contradictions;
      rep.worst_violation = std::min(rep.worst_violation, fm - chord);
    }
    if (t1 < t2) {
      if (fl.operator_monotone_increasing && f1 > f2 + tol) {
        ++rep.monotonicity_contradictions;
        rep.worst_violation = std::min(rep.worst_violation, f2 - f1);
      }
      if (fl.operator_monotone_decreasing && f1 < f2 - tol) {
        ++rep.monotonicity_contradictions;
        rep.worst_violation = std::min(rep.worst_violation, f1 - f2);
      }
    }
  }
  rep.consistent = rep.convexity_contradictions == 0 && rep.concavity_contradictions == 0 &&
                   rep.monotonicity_contradictions == 0;
  return rep;
}

} // namespace loewner
