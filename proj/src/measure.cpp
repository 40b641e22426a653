#include "hypercert/measure.hpp"

#include <cmath>
#include <limits>

namespace hypercert {

double integrate(const MapSystem& sys, const EmpiricalMeasure& mu,
                 const Observable& phi) {
  if (mu.n < 1) throw usage_error("empirical measure needs n >= 1");
  return birkhoff_average(sys, phi, mu.x, mu.n);
}

double invariance_defect(const MapSystem& sys, const EmpiricalMeasure& mu,
                         const Observable& phi) {
  if (mu.n < 1) throw usage_error("empirical measure needs n >= 1");
  Point fx = evaluate(sys, mu.x, mu.n);
  return std::fabs(phi(sys, fx) - phi(sys, mu.x)) / static_cast<double>(mu.n);
}

BirkhoffLimitEstimate birkhoff_limit_estimate(const MapSystem& sys,
                                              const Observable& phi,
                                              const Point& x, long horizon,
                                              long tail_start) {
  if (horizon < 1) throw usage_error("horizon must be >= 1");
  if (tail_start < 1 || tail_start > horizon)
    throw usage_error("tail_start must lie in [1, horizon]");
  BirkhoffLimitEstimate est;
  est.x = x;
  est.horizon = horizon;
  est.tail_start = tail_start;
  est.running_averages.reserve(static_cast<size_t>(horizon));
  double sum = 0.0, comp = 0.0;
  double liminf = std::numeric_limits<double>::infinity();
  Point y = x;
  for (long n = 1; n <= horizon; ++n) {
    double term = phi(sys, y) - comp;
    double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    double avg = sum / static_cast<double>(n);
    est.running_averages.push_back(avg);
    if (n >= tail_start) liminf = std::min(liminf, avg);
    y = sys.eval(y);
  }
  est.liminf_estimate = liminf;
  return est;
}

}  // namespace hypercert
