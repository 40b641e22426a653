#include "hypercert/box.hpp"

#include <algorithm>
#include <cmath>

namespace hypercert {

Point Point::circle(double x) {
  Point p;
  p.dim = 1;
  p.c[0] = reduce_mod1(x);
  return p;
}

Point Point::torus(double x, double y) {
  Point p;
  p.dim = 2;
  p.c[0] = reduce_mod1(x);
  p.c[1] = reduce_mod1(y);
  return p;
}

double reduce_mod1(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // guards against rounding at the seam
  return r;
}

Point reduce(const Point& p) {
  Point r = p;
  for (int i = 0; i < p.dim; ++i) r.c[i] = reduce_mod1(p.c[i]);
  return r;
}

bool close_mod1(const Point& a, const Point& b, double tol) {
  for (int i = 0; i < a.dim; ++i) {
    double d = std::fabs(reduce_mod1(a.c[i]) - reduce_mod1(b.c[i]));
    d = std::min(d, 1.0 - d);
    if (d > tol) return false;
  }
  return true;
}

Box Box::full(int dim) {
  Box b;
  b.dim = dim;
  for (int i = 0; i < dim; ++i) b.iv[i] = {0.0, 1.0};
  return b;
}

Box canonical(const Box& b) {
  Box r = b;
  for (int i = 0; i < b.dim; ++i) {
    double w = b.iv[i].hi - b.iv[i].lo;
    if (!(w < 1.0)) {
      r.iv[i] = {0.0, 1.0};
      continue;
    }
    double lo = reduce_mod1(b.iv[i].lo);
    // Keep the representative width: the arc is the same subset of the
    // circle, shifted by an integer.
    r.iv[i] = {lo, lo + w};
  }
  return r;
}

namespace {

bool axis_contains(const Interval& iv, double x) {
  double r = reduce_mod1(x);
  return (iv.lo <= r && r <= iv.hi) || (iv.lo <= r + 1.0 && r + 1.0 <= iv.hi);
}

}  // namespace

bool box_contains(const Box& b, const Point& p) {
  for (int i = 0; i < b.dim; ++i)
    if (!axis_contains(b.iv[i], p.c[i])) return false;
  return true;
}

bool box_subset(const Box& inner, const Box& outer) {
  Box a = canonical(inner), b = canonical(outer);
  for (int i = 0; i < a.dim; ++i) {
    if (b.iv[i].hi - b.iv[i].lo >= 1.0) continue;
    bool plain = b.iv[i].lo <= a.iv[i].lo && a.iv[i].hi <= b.iv[i].hi;
    bool shifted = b.iv[i].lo <= a.iv[i].lo + 1.0 && a.iv[i].hi + 1.0 <= b.iv[i].hi;
    if (!plain && !shifted) return false;
  }
  return true;
}

bool box_is_full(const Box& b) {
  for (int i = 0; i < b.dim; ++i)
    if (b.iv[i].hi - b.iv[i].lo < 1.0) return false;
  return true;
}

int longest_axis(const Box& b) {
  int axis = 0;
  double best = b.iv[0].width();
  for (int i = 1; i < b.dim; ++i) {
    if (b.iv[i].width() > best) {
      best = b.iv[i].width();
      axis = i;
    }
  }
  return axis;
}

std::pair<Box, Box> bisect(const Box& b, int axis) {
  Box lo = b, hi = b;
  double mid = 0.5 * (b.iv[axis].lo + b.iv[axis].hi);
  lo.iv[axis] = {b.iv[axis].lo, mid};
  hi.iv[axis] = {mid, b.iv[axis].hi};
  return {lo, hi};
}

Point box_midpoint(const Box& b) {
  Point p;
  p.dim = b.dim;
  for (int i = 0; i < b.dim; ++i) p.c[i] = reduce_mod1(b.iv[i].mid());
  return p;
}

}  // namespace hypercert
