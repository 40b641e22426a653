#pragma once

#include <optional>
#include <vector>

#include "hypercert/cover.hpp"
#include "hypercert/observable.hpp"

namespace hypercert {

/// A periodic orbit carrying the uniform invariant measure on its points.
struct PeriodicOrbitWitness {
  std::vector<Point> points;  // ordered orbit, smallest representative first
  int period = 1;
  double average = 0.0;  // filled when an observable has been integrated
  double residual = 0.0;  // max over the orbit of dist(f^period(x), x)
};

/// All fixed points of f^p. Circle systems of degree >= 2 solve
/// lift(f^p)(x) = x + k on each monotone branch by bisection; the cat
/// family enumerates rational periodic points exactly; the two-point base
/// is inspected directly.
std::vector<Point> fixed_points(const MapSystem& sys, int p);

/// All periodic orbits of minimal period <= p_max, deduplicated, each with
/// residual <= 1e-10.
std::vector<PeriodicOrbitWitness> find_periodic_orbits(const MapSystem& sys,
                                                       int p_max);

/// Integral of phi for the uniform measure on the orbit (mean over points).
double orbit_average(const MapSystem& sys, const PeriodicOrbitWitness& orbit,
                     const Observable& phi);

/// Witness orbit with the largest phi-average if that average is >= -tol
/// (the strict-negativity hypothesis fails on its invariant measure);
/// nullopt otherwise.
std::optional<PeriodicOrbitWitness> falsify_total_probability(
    const MapSystem& sys, const Observable& phi, int p_max, double tol = 1e-10);

struct EmpiricalDiagnostic {
  Point x;
  int k_max = 0;
  long horizon = 0;
  std::vector<long> times;  // first n with average > -1/k, per k; 0 = none
  bool violation_found = false;
};

/// For each k <= k_max scans n <= horizon for the first time the Birkhoff
/// average exceeds -1/k. All k succeeding is evidence the liminf at x is
/// nonnegative.
EmpiricalDiagnostic empirical_measure_diagnostic(const MapSystem& sys,
                                                 const Observable& phi,
                                                 const Point& x, int k_max,
                                                 long horizon);

struct EventualExpansionEntry {
  bool boxed = false;
  Point x;
  Box box;
  std::optional<int> n;  // least N with |(df^N)^{-1}| < 1, if any <= n_max
  double norm_bound = 0.0;  // best (smallest) inverse-norm bound achieved
};

struct EventualExpansionReport {
  int n_max = 0;
  std::vector<EventualExpansionEntry> entries;
  std::vector<size_t> failures;  // indices with no admissible N
};

EventualExpansionReport eventual_expansion_check_grid(const MapSystem& sys,
                                                      int grid, int n_max);

/// Certified variant over the boxes of a cover certificate.
EventualExpansionReport eventual_expansion_check_cover(
    const MapSystem& sys, const CoverCertificate& cert, int n_max);

}  // namespace hypercert
