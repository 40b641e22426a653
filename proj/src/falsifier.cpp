#include "hypercert/falsifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypercert {

namespace {

const double kOrbitResidualTol = 1e-10;

double dist_mod1(double a, double b) {
  double d = std::fabs(reduce_mod1(a) - reduce_mod1(b));
  return std::min(d, 1.0 - d);
}

double point_dist(const Point& a, const Point& b) {
  double d = 0.0;
  for (int i = 0; i < a.dim; ++i) d = std::max(d, dist_mod1(a.c[i], b.c[i]));
  return d;
}

std::vector<Point> circle_fixed_points(const MapSystem& sys, int p) {
  if (sys.degree() < 2)
    throw unsupported_error("periodic-orbit search needs a degree >= 2 circle map");
  auto lift_p = [&](double x) {
    double y = x;
    for (int i = 0; i < p; ++i) y = sys.lift(y);
    return y;
  };
  auto h = [&](double x) { return lift_p(x) - x; };
  double h0 = h(0.0);
  double h1 = h(1.0);
  long k_lo = static_cast<long>(std::ceil(h0 - 1e-9));
  long k_hi = static_cast<long>(std::floor(h1 + 1e-9));
  std::vector<Point> out;
  for (long k = k_lo; k <= k_hi; ++k) {
    double fa = h0 - static_cast<double>(k);
    double fb = h1 - static_cast<double>(k);
    if (fa > 0.0 || fb < 0.0) continue;
    double a = 0.0, b = 1.0;
    for (int it = 0; it < 200 && b - a > 0.0; ++it) {
      double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      if (h(m) - static_cast<double>(k) < 0.0)
        a = m;
      else
        b = m;
    }
    double r = (std::fabs(h(a) - static_cast<double>(k)) <=
                std::fabs(h(b) - static_cast<double>(k)))
                   ? a
                   : b;
    if (r >= 1.0) continue;  // same circle point as the k = h(0) root at 0
    Point x = Point::circle(r);
    if (point_dist(evaluate(sys, x, p), x) <= 1e-12) out.push_back(x);
  }
  return out;
}

struct IMat2x2LL {
  long long m[2][2];
};

IMat2x2LL cat_power(int p) {
  IMat2x2LL a{{{2, 1}, {1, 1}}};
  IMat2x2LL r{{{1, 0}, {0, 1}}};
  for (int i = 0; i < p; ++i) {
    IMat2x2LL t;
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        t.m[j][k] = r.m[j][0] * a.m[0][k] + r.m[j][1] * a.m[1][k];
    r = t;
  }
  return r;
}

std::vector<Point> cat_fixed_points(int p) {
  IMat2x2LL ap = cat_power(p);
  long long m00 = ap.m[0][0] - 1, m01 = ap.m[0][1];
  long long m10 = ap.m[1][0], m11 = ap.m[1][1] - 1;
  long long det = m00 * m11 - m01 * m10;
  long long d = std::llabs(det);
  if (d == 0) throw unsupported_error("degenerate period for the cat family");
  if (d > 20000)
    throw usage_error("cat periodic-point enumeration limited to trace(A^p) - 2 <= 20000");
  auto md = [&](long long v) { return ((v % d) + d) % d; };
  std::vector<Point> out;
  for (long long u = 0; u < d; ++u)
    for (long long v = 0; v < d; ++v) {
      if (md(m00 * u + m01 * v) != 0) continue;
      if (md(m10 * u + m11 * v) != 0) continue;
      out.push_back(Point::torus(static_cast<double>(u) / static_cast<double>(d),
                                 static_cast<double>(v) / static_cast<double>(d)));
    }
  return out;
}

std::vector<Point> two_point_fixed_points(int p) {
  if (p % 2 != 0) return {};
  return {two_point_p(), two_point_q()};
}

bool orbit_known(const std::vector<PeriodicOrbitWitness>& orbits, const Point& rep) {
  for (const auto& o : orbits)
    for (const auto& pt : o.points)
      if (close_mod1(pt, rep, 1e-9)) return true;
  return false;
}

bool point_less(const Point& a, const Point& b) {
  for (int i = 0; i < a.dim; ++i) {
    if (a.c[i] < b.c[i]) return true;
    if (a.c[i] > b.c[i]) return false;
  }
  return false;
}

}  // namespace

std::vector<Point> fixed_points(const MapSystem& sys, int p) {
  if (p < 1) throw usage_error("period must be >= 1");
  switch (sys.space()) {
    case Space::circle: return circle_fixed_points(sys, p);
    case Space::torus:
      if (sys.id() != "cat")
        throw unsupported_error(
            "torus periodic-orbit enumeration is available for the cat map only");
      return cat_fixed_points(p);
    case Space::two_point: return two_point_fixed_points(p);
  }
  throw unsupported_error("unsupported phase space");
}

std::vector<PeriodicOrbitWitness> find_periodic_orbits(const MapSystem& sys,
                                                       int p_max) {
  if (p_max < 1) throw usage_error("p_max must be >= 1");
  std::vector<PeriodicOrbitWitness> orbits;
  for (int p = 1; p <= p_max; ++p) {
    for (const Point& x : fixed_points(sys, p)) {
      // Minimal period: first return within tolerance.
      int minimal = p;
      Point y = x;
      for (int t = 1; t < p; ++t) {
        y = sys.eval(y);
        if (close_mod1(y, x, 1e-9)) {
          minimal = t;
          break;
        }
      }
      if (minimal < p) continue;  // already discovered at its minimal period
      if (orbit_known(orbits, x)) continue;

      std::vector<Point> pts;
      pts.reserve(static_cast<size_t>(p));
      Point cur = x;
      for (int t = 0; t < p; ++t) {
        pts.push_back(cur);
        cur = sys.eval(cur);
      }
      size_t rep = 0;
      for (size_t i = 1; i < pts.size(); ++i)
        if (point_less(pts[i], pts[rep])) rep = i;
      std::rotate(pts.begin(), pts.begin() + static_cast<long>(rep), pts.end());

      double residual = 0.0;
      for (const Point& pt : pts)
        residual = std::max(residual, point_dist(evaluate(sys, pt, p), pt));
      if (residual > kOrbitResidualTol) continue;

      PeriodicOrbitWitness w;
      w.points = std::move(pts);
      w.period = p;
      w.residual = residual;
      orbits.push_back(std::move(w));
    }
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const PeriodicOrbitWitness& a, const PeriodicOrbitWitness& b) {
              if (a.period != b.period) return a.period < b.period;
              return point_less(a.points[0], b.points[0]);
            });
  return orbits;
}

double orbit_average(const MapSystem& sys, const PeriodicOrbitWitness& orbit,
                     const Observable& phi) {
  double sum = 0.0;
  for (const Point& pt : orbit.points) sum += phi(sys, pt);
  return sum / static_cast<double>(orbit.points.size());
}

std::optional<PeriodicOrbitWitness> falsify_total_probability(
    const MapSystem& sys, const Observable& phi, int p_max, double tol) {
  std::optional<PeriodicOrbitWitness> best;
  for (PeriodicOrbitWitness& orbit : find_periodic_orbits(sys, p_max)) {
    orbit.average = orbit_average(sys, orbit, phi);
    if (!best || orbit.average > best->average) best = std::move(orbit);
  }
  if (best && best->average >= -tol) return best;
  return std::nullopt;
}

EmpiricalDiagnostic empirical_measure_diagnostic(const MapSystem& sys,
                                                 const Observable& phi,
                                                 const Point& x, int k_max,
                                                 long horizon) {
  if (k_max < 1 || horizon < k_max)
    throw usage_error("diagnostic requires k_max >= 1 and horizon >= k_max");
  EmpiricalDiagnostic diag;
  diag.x = x;
  diag.k_max = k_max;
  diag.horizon = horizon;
  diag.times.assign(static_cast<size_t>(k_max), 0);

  std::vector<double> averages(static_cast<size_t>(horizon));
  double sum = 0.0, comp = 0.0;
  Point y = x;
  for (long n = 1; n <= horizon; ++n) {
    double term = phi(sys, y) - comp;
    double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    averages[static_cast<size_t>(n - 1)] = sum / static_cast<double>(n);
    y = sys.eval(y);
  }
  diag.violation_found = true;
  for (int k = 1; k <= k_max; ++k) {
    double threshold = -1.0 / static_cast<double>(k);
    long hit = 0;
    for (long n = 1; n <= horizon; ++n) {
      if (averages[static_cast<size_t>(n - 1)] > threshold) {
        hit = n;
        break;
      }
    }
    diag.times[static_cast<size_t>(k - 1)] = hit;
    if (hit == 0) diag.violation_found = false;
  }
  return diag;
}

namespace {

EventualExpansionEntry check_point(const MapSystem& sys, const Point& x, int n_max) {
  EventualExpansionEntry e;
  e.x = x;
  e.norm_bound = std::numeric_limits<double>::infinity();
  Mat prod = Mat::identity(sys.dim());
  Point y = x;
  for (int n = 1; n <= n_max; ++n) {
    prod = sys.deriv(y) * prod;
    y = sys.eval(y);
    double bound = inv_norm(prod);
    e.norm_bound = std::min(e.norm_bound, bound);
    if (bound < 1.0) {
      e.n = n;
      break;
    }
  }
  return e;
}

EventualExpansionEntry check_box(const MapSystem& sys, const Box& b, int n_max) {
  EventualExpansionEntry e;
  e.boxed = true;
  e.box = canonical(b);
  e.norm_bound = std::numeric_limits<double>::infinity();
  IMat prod = IMat::from(Mat::identity(sys.dim()));
  Box cur = e.box;
  for (int n = 1; n <= n_max; ++n) {
    prod = sys.deriv_box(cur) * prod;
    cur = sys.eval_box(cur);
    double bound;
    try {
      bound = matrix_inv_norm_bound(prod).hi;
    } catch (const error&) {
      break;
    }
    e.norm_bound = std::min(e.norm_bound, bound);
    if (bound < 1.0) {
      e.n = n;
      break;
    }
  }
  return e;
}

void finish_report(EventualExpansionReport& rep) {
  for (size_t i = 0; i < rep.entries.size(); ++i)
    if (!rep.entries[i].n) rep.failures.push_back(i);
}

}  // namespace

EventualExpansionReport eventual_expansion_check_grid(const MapSystem& sys,
                                                      int grid, int n_max) {
  if (grid < 1 || n_max < 1) throw usage_error("grid and n_max must be >= 1");
  EventualExpansionReport rep;
  rep.n_max = n_max;
  if (sys.space() == Space::two_point) {
    rep.entries.push_back(check_point(sys, two_point_p(), n_max));
    rep.entries.push_back(check_point(sys, two_point_q(), n_max));
  } else if (sys.base_dim() == 1) {
    for (int i = 0; i < grid; ++i)
      rep.entries.push_back(check_point(sys, Point::circle(double(i) / grid), n_max));
  } else {
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j)
        rep.entries.push_back(
            check_point(sys, Point::torus(double(i) / grid, double(j) / grid), n_max));
  }
  finish_report(rep);
  return rep;
}

EventualExpansionReport eventual_expansion_check_cover(
    const MapSystem& sys, const CoverCertificate& cert, int n_max) {
  if (n_max < 1) throw usage_error("n_max must be >= 1");
  EventualExpansionReport rep;
  rep.n_max = n_max;
  for (const CoverEntry& entry : cert.entries)
    rep.entries.push_back(check_box(sys, entry.box, n_max));
  finish_report(rep);
  return rep;
}

}  // namespace hypercert
