#include "hypercert/interval.hpp"

#include <algorithm>
#include <cmath>

namespace hypercert {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Two-ulp inflation for libm results, which are not correctly rounded on
// every platform but stay well within one ulp of exact on glibc.
double fdown(double v) {
  if (!std::isfinite(v)) return v;
  return std::nextafter(std::nextafter(v, -kInf), -kInf);
}

double fup(double v) {
  if (!std::isfinite(v)) return v;
  return std::nextafter(std::nextafter(v, kInf), kInf);
}

Interval checked(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi)) return Interval::whole_line();
  return {lo, hi};
}

}  // namespace

double round_down(double v) {
  if (!std::isfinite(v)) return v;
  return std::nextafter(v, -kInf);
}

double round_up(double v) {
  if (!std::isfinite(v)) return v;
  return std::nextafter(v, kInf);
}

Interval iadd(Interval a, Interval b) {
  return checked(round_down(a.lo + b.lo), round_up(a.hi + b.hi));
}

Interval isub(Interval a, Interval b) {
  return checked(round_down(a.lo - b.hi), round_up(a.hi - b.lo));
}

Interval imul(Interval a, Interval b) {
  const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  double lo = p[0], hi = p[0];
  for (int i = 1; i < 4; ++i) {
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
  }
  return checked(round_down(lo), round_up(hi));
}

Interval idiv(Interval a, Interval b) {
  if (b.lo <= 0.0 && 0.0 <= b.hi)
    throw interval_domain_error("interval division by an interval containing zero");
  const double q[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  double lo = q[0], hi = q[0];
  for (int i = 1; i < 4; ++i) {
    lo = std::min(lo, q[i]);
    hi = std::max(hi, q[i]);
  }
  return checked(round_down(lo), round_up(hi));
}

Interval ineg(Interval a) { return {-a.hi, -a.lo}; }

Interval iabs(Interval a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return {-a.hi, -a.lo};
  return {0.0, std::max(-a.lo, a.hi)};
}

Interval isqr(Interval a) {
  Interval m = iabs(a);
  return checked(round_down(m.lo * m.lo), round_up(m.hi * m.hi));
}

Interval isqrt(Interval a) {
  if (a.lo < 0.0) throw interval_domain_error("sqrt of an interval with negative lower end");
  double lo = std::max(0.0, fdown(std::sqrt(a.lo)));
  return checked(lo, fup(std::sqrt(a.hi)));
}

Interval ilog(Interval a) {
  if (a.lo <= 0.0) throw interval_domain_error("log of an interval touching (-inf, 0]");
  return checked(fdown(std::log(a.lo)), fup(std::log(a.hi)));
}

Interval iexp(Interval a) {
  double lo = std::max(0.0, fdown(std::exp(a.lo)));
  return checked(lo, fup(std::exp(a.hi)));
}

namespace {

// Absolute padding used when testing whether a critical point of sin/cos
// lies inside the argument interval; near-misses get included, which only
// widens the result.
const double kCritPad = 1e-9;
const double kPi = 3.14159265358979323846;

bool has_critical_point(const Interval& a, double phase, double period) {
  double k = std::ceil((a.lo - phase - kCritPad) / period);
  double t = phase + k * period;
  return t <= a.hi + kCritPad;
}

Interval bounded_trig(double flo, double fhi, bool max_hit, bool min_hit) {
  double lo = min_hit ? -1.0 : std::max(-1.0, fdown(std::min(flo, fhi)));
  double hi = max_hit ? 1.0 : std::min(1.0, fup(std::max(flo, fhi)));
  return {lo, hi};
}

}  // namespace

Interval isin(Interval a) {
  if (!a.is_finite() || a.width() >= 2.0 * kPi) return {-1.0, 1.0};
  bool max_hit = has_critical_point(a, kPi / 2.0, 2.0 * kPi);
  bool min_hit = has_critical_point(a, -kPi / 2.0, 2.0 * kPi);
  return bounded_trig(std::sin(a.lo), std::sin(a.hi), max_hit, min_hit);
}

Interval icos(Interval a) {
  if (!a.is_finite() || a.width() >= 2.0 * kPi) return {-1.0, 1.0};
  bool max_hit = has_critical_point(a, 0.0, 2.0 * kPi);
  bool min_hit = has_critical_point(a, kPi, 2.0 * kPi);
  return bounded_trig(std::cos(a.lo), std::cos(a.hi), max_hit, min_hit);
}

Interval ihull(Interval a, Interval b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval iscale(Interval a, double s) { return imul(a, Interval::point(s)); }

Interval ishift(Interval a, double s) { return iadd(a, Interval::point(s)); }

Interval itwo_pi() {
  const double two_pi = 2.0 * kPi;
  return {round_down(two_pi), round_up(two_pi)};
}

}  // namespace hypercert
