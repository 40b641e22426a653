#pragma once

#include <vector>

#include "hypercert/observable.hpp"

namespace hypercert {

/// Uniform atomic measure on the orbit segment {x, fx, ..., f^{n-1}x},
/// each atom of mass 1/n.
struct EmpiricalMeasure {
  Point x;
  long n = 1;
};

/// Atom-weighted sum of phi; identical to the Birkhoff average at time n.
double integrate(const MapSystem& sys, const EmpiricalMeasure& mu,
                 const Observable& phi);

/// |integral of phi composed with f - integral of phi|. Telescopes to
/// |phi(f^n x) - phi(x)| / n exactly, so it vanishes as n grows for any
/// bounded observable; periodic segments with n = period give 0.
double invariance_defect(const MapSystem& sys, const EmpiricalMeasure& mu,
                         const Observable& phi);

struct BirkhoffLimitEstimate {
  Point x;
  long horizon = 0;
  std::vector<double> running_averages;  // (1/n) sum, n = 1..horizon
  double liminf_estimate = 0.0;          // min over the recorded tail
  long tail_start = 1;                   // first n counted into the tail
};

/// Running averages of phi along the orbit of x up to horizon; the liminf
/// estimate is the minimum over n >= tail_start.
BirkhoffLimitEstimate birkhoff_limit_estimate(const MapSystem& sys,
                                              const Observable& phi,
                                              const Point& x, long horizon,
                                              long tail_start = 1);

}  // namespace hypercert
