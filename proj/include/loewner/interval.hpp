#pragma once

#include <algorithm>
#include <cmath>

#include "loewner/error.hpp"

namespace loewner {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(std::isfinite(lo) && std::isfinite(hi)))
      fail(ErrorCode::InvalidInterval, "interval endpoints must be finite");
    if (lo > hi)
      fail(ErrorCode::InvalidInterval, "interval has lo > hi");
  }

  double width() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }
  bool degenerate() const { return lo == hi; }
};

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

/// Signed separation between two closed intervals: positive when disjoint
/// (the size of the gap), negative when overlapping (the overlap depth).
inline double interval_gap(const Interval& a, const Interval& b) {
  return std::max(b.lo - a.hi, a.lo - b.hi);
}

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

} // namespace loewner
