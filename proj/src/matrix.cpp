#include "hypercert/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hypercert {

namespace {
const double kPi = 3.14159265358979323846;
}

Vec normalize(const Vec& v) {
  double n = v.norm();
  if (n == 0.0) throw usage_error("cannot normalize the zero vector");
  Vec r = v;
  for (int i = 0; i < v.dim; ++i) r.v[i] /= n;
  return r;
}

double line_angle(const Vec& v) {
  double a = std::atan2(v.v[1], v.v[0]);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;
  return a;
}

double line_distance(const Vec& a, const Vec& b) {
  double d = std::fabs(line_angle(a) - line_angle(b));
  return std::min(d, kPi - d);
}

Mat Mat::identity(int dim) {
  Mat r;
  r.dim = dim;
  r.m[0][0] = 1.0;
  if (dim == 2) r.m[1][1] = 1.0;
  return r;
}

Mat Mat::diag(double a, double b) {
  Mat r;
  r.dim = 2;
  r.m[0][0] = a;
  r.m[1][1] = b;
  return r;
}

Mat Mat::operator*(const Mat& rhs) const {
  Mat r;
  r.dim = dim;
  if (dim == 1) {
    r.m[0][0] = m[0][0] * rhs.m[0][0];
    return r;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
  return r;
}

Vec Mat::apply(const Vec& x) const {
  Vec r;
  r.dim = dim;
  if (dim == 1) {
    r.v[0] = m[0][0] * x.v[0];
    return r;
  }
  r.v[0] = m[0][0] * x.v[0] + m[0][1] * x.v[1];
  r.v[1] = m[1][0] * x.v[0] + m[1][1] * x.v[1];
  return r;
}

double Mat::det() const {
  if (dim == 1) return m[0][0];
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

double op_norm(const Mat& a) {
  if (a.dim == 1) return std::fabs(a.m[0][0]);
  double f = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f += a.m[i][j] * a.m[i][j];
  double d = a.det();
  double disc = std::max(f * f - 4.0 * d * d, 0.0);
  return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

double inv_norm(const Mat& a, double det_floor) {
  double d = std::fabs(a.det());
  if (d < det_floor)
    throw singular_matrix_error("derivative determinant below the configured floor");
  if (a.dim == 1) return 1.0 / d;
  return op_norm(a) / d;
}

Mat inverse(const Mat& a, double det_floor) {
  double d = a.det();
  if (std::fabs(d) < det_floor)
    throw singular_matrix_error("matrix determinant below the configured floor");
  Mat r;
  r.dim = a.dim;
  if (a.dim == 1) {
    r.m[0][0] = 1.0 / d;
    return r;
  }
  r.m[0][0] = a.m[1][1] / d;
  r.m[0][1] = -a.m[0][1] / d;
  r.m[1][0] = -a.m[1][0] / d;
  r.m[1][1] = a.m[0][0] / d;
  return r;
}

IMat IMat::from(const Mat& a) {
  IMat r;
  r.dim = a.dim;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = Interval::point(a.m[i][j]);
  return r;
}

IMat IMat::operator*(const IMat& rhs) const {
  IMat r;
  r.dim = dim;
  if (dim == 1) {
    r.m[0][0] = imul(m[0][0], rhs.m[0][0]);
    return r;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = iadd(imul(m[i][0], rhs.m[0][j]), imul(m[i][1], rhs.m[1][j]));
  return r;
}

Interval IMat::det() const {
  if (dim == 1) return m[0][0];
  return isub(imul(m[0][0], m[1][1]), imul(m[0][1], m[1][0]));
}

IMat ihull(const IMat& a, const IMat& b) {
  IMat r;
  r.dim = a.dim;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = ihull(a.m[i][j], b.m[i][j]);
  return r;
}

namespace {

// Interval enclosure of the largest singular value.
Interval smax_bound(const IMat& a) {
  Interval f{0.0, 0.0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f = iadd(f, isqr(a.m[i][j]));
  Interval d2 = isqr(a.det());
  Interval disc = isub(isqr(f), iscale(d2, 4.0));
  disc.lo = std::max(disc.lo, 0.0);  // exact value is nonnegative
  if (disc.hi < 0.0) disc.hi = 0.0;
  Interval s2 = iscale(iadd(f, isqrt(disc)), 0.5);
  if (s2.lo < 0.0) s2.lo = 0.0;
  return isqrt(s2);
}

}  // namespace

Interval matrix_inv_norm_bound(const IMat& a) {
  Interval d = a.det();
  if (d.contains(0.0))
    throw singular_matrix_error("determinant interval contains zero");
  if (a.dim == 1) return idiv(Interval::point(1.0), iabs(a.m[0][0]));
  return idiv(smax_bound(a), iabs(d));
}

Interval matrix_norm_bound(const IMat& a) {
  if (a.dim == 1) return iabs(a.m[0][0]);
  return smax_bound(a);
}

IVec apply(const IMat& a, const Vec& x) {
  IVec r;
  r.dim = a.dim;
  if (a.dim == 1) {
    r.v[0] = iscale(a.m[0][0], x.v[0]);
    return r;
  }
  for (int i = 0; i < 2; ++i)
    r.v[i] = iadd(iscale(a.m[i][0], x.v[0]), iscale(a.m[i][1], x.v[1]));
  return r;
}

Interval ivec_norm(const IVec& x) {
  if (x.dim == 1) return iabs(x.v[0]);
  Interval s = iadd(isqr(x.v[0]), isqr(x.v[1]));
  if (s.lo < 0.0) s.lo = 0.0;
  return isqrt(s);
}

}  // namespace hypercert
