#pragma once

#include "hypercert/observable.hpp"

namespace hypercert {

/// Interval containing { (1/N) sum_{j<N} phi(f^j y) : y in B }. Box images
/// that wrap the whole phase space are clamped to the full space (still a
/// valid enclosure); if the observable cannot be evaluated on some iterate
/// the result is unbounded (whole line), never a failure.
Interval enclose_orbit_average(const MapSystem& sys, const Box& b,
                               const Observable& phi, long n);

}  // namespace hypercert
