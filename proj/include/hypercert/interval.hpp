#pragma once

#include <cmath>
#include <limits>

#include "hypercert/errors.hpp"

namespace hypercert {

/// Closed interval [lo, hi] of binary64 numbers. Every operation returns an
/// interval containing the exact real image of its inputs; outward rounding
/// is realized by ulp inflation of the endpoints (one ulp for arithmetic,
/// two for the libm elementary functions).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  static Interval whole_line() {
    const double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf};
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

double round_down(double v);
double round_up(double v);

Interval iadd(Interval a, Interval b);
Interval isub(Interval a, Interval b);
Interval imul(Interval a, Interval b);
Interval idiv(Interval a, Interval b);  // throws interval_domain_error if 0 in b
Interval ineg(Interval a);
Interval iabs(Interval a);
Interval isqr(Interval a);
Interval isqrt(Interval a);  // throws interval_domain_error if a.lo < 0
Interval ilog(Interval a);   // throws interval_domain_error if a.lo <= 0
Interval iexp(Interval a);
Interval isin(Interval a);
Interval icos(Interval a);
Interval ihull(Interval a, Interval b);
Interval iscale(Interval a, double s);
Interval ishift(Interval a, double s);

/// Enclosure of 2*pi.
Interval itwo_pi();

}  // namespace hypercert
