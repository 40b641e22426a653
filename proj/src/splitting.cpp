#include "hypercert/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hypercert {

namespace {

// Fixed generic seed direction, not aligned with any gallery eigenvector.
Vec generic_direction() {
  Vec v;
  v.dim = 2;
  v.v[0] = 0.6170234182743;
  v.v[1] = 0.7869428172953;
  return normalize(v);
}

Vec canonical_sign(Vec v) {
  if (v.v[0] < 0.0 || (v.v[0] == 0.0 && v.v[1] < 0.0)) {
    v.v[0] = -v.v[0];
    v.v[1] = -v.v[1];
  }
  return v;
}

}  // namespace

std::shared_ptr<const Splitting> Splitting::exact(SystemPtr sys) {
  if (!sys->has_exact_splitting())
    throw unsupported_error("system '" + sys->id() + "' provides no exact splitting");
  return std::shared_ptr<const Splitting>(
      new Splitting(std::move(sys), SplittingSource::exact, 0));
}

std::shared_ptr<const Splitting> Splitting::estimated(SystemPtr sys, int n_iter) {
  if (n_iter < 1) throw usage_error("splitting estimation requires n_iter >= 1");
  if (sys->dim() != 2)
    throw unsupported_error("splittings are defined for 2-dimensional tangent spaces");
  if (!sys->invertible())
    throw unsupported_error("splitting estimation requires an invertible system");
  return std::shared_ptr<const Splitting>(
      new Splitting(std::move(sys), SplittingSource::estimated, n_iter));
}

SplittingDirs Splitting::dirs(const Point& x) const {
  if (source_ == SplittingSource::exact) return sys_->exact_splitting(x);
  return estimate_splitting(*sys_, x, n_iter_);
}

double Splitting::invariance_residual(const Point& x) const {
  SplittingDirs at_x = dirs(x);
  Point fx = sys_->eval(x);
  SplittingDirs at_fx = dirs(fx);
  Mat d = sys_->deriv(x);
  double ru = line_distance(d.apply(at_x.u), at_fx.u);
  double rs = line_distance(d.apply(at_x.s), at_fx.s);
  return std::max(ru, rs);
}

SplittingDirs estimate_splitting(const MapSystem& sys, const Point& x, int n_iter) {
  if (sys.has_exact_splitting()) return sys.exact_splitting(x);
  if (!sys.invertible())
    throw unsupported_error("splitting estimation requires an invertible system");

  SplittingDirs out;

  // Unstable: transport a generic direction forward from f^{-n}(x).
  Point y = x;
  for (int i = 0; i < n_iter; ++i) y = sys.inverse(y);
  Vec w = generic_direction();
  for (int i = 0; i < n_iter; ++i) {
    w = sys.deriv(y).apply(w);
    w = normalize(w);
    y = sys.eval(y);
  }
  out.u = canonical_sign(w);

  // Stable: pull a generic direction back along the forward orbit of x.
  std::vector<Mat> derivs;
  derivs.reserve(static_cast<size_t>(n_iter));
  Point z = x;
  for (int i = 0; i < n_iter; ++i) {
    derivs.push_back(sys.deriv(z));
    z = sys.eval(z);
  }
  Vec v = generic_direction();
  for (int i = n_iter - 1; i >= 0; --i) {
    v = inverse(derivs[static_cast<size_t>(i)]).apply(v);
    v = normalize(v);
  }
  out.s = canonical_sign(v);
  return out;
}

ContinuityReport splitting_continuity_check(const MapSystem& sys,
                                            const Splitting& splitting, int grid) {
  ContinuityReport rep;
  rep.grid = grid;
  if (sys.space() == Space::two_point) {
    rep.skipped = true;  // discrete base, no adjacency
    return rep;
  }
  if (grid < 2) throw usage_error("continuity check requires grid >= 2");
  if (sys.space() != Space::torus)
    throw unsupported_error("continuity check applies to torus systems");

  std::vector<double> angles(static_cast<size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      Point p = Point::torus(double(i) / grid, double(j) / grid);
      angles[static_cast<size_t>(i) * grid + j] = line_angle(splitting.dirs(p).u);
    }
  const double kPi = 3.14159265358979323846;
  auto dist = [&](double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, kPi - d);
  };
  double worst = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double a = angles[static_cast<size_t>(i) * grid + j];
      double right = angles[static_cast<size_t>((i + 1) % grid) * grid + j];
      double up = angles[static_cast<size_t>(i) * grid + (j + 1) % grid];
      worst = std::max({worst, dist(a, right), dist(a, up)});
    }
  rep.max_adjacent_angle = worst;
  return rep;
}

}  // namespace hypercert
