#include "hypercert/enclosure.hpp"

namespace hypercert {

Interval enclose_orbit_average(const MapSystem& sys, const Box& b,
                               const Observable& phi, long n) {
  if (n < 1) throw usage_error("orbit-average enclosure requires N >= 1");
  Box cur = canonical(b);
  Interval sum{0.0, 0.0};
  for (long j = 0; j < n; ++j) {
    try {
      sum = iadd(sum, phi.enclose(sys, cur));
    } catch (const error&) {
      return Interval::whole_line();
    }
    if (j + 1 < n) cur = sys.eval_box(cur);
  }
  return idiv(sum, Interval::point(static_cast<double>(n)));
}

}  // namespace hypercert
