#pragma once

#include <cmath>

#include "hypercert/interval.hpp"

namespace hypercert {

/// Tangent vector component data (dimension 1 or 2).
struct Vec {
  int dim = 1;
  double v[2] = {0.0, 0.0};

  double norm() const {
    return dim == 1 ? std::fabs(v[0]) : std::hypot(v[0], v[1]);
  }
};

Vec normalize(const Vec& v);

/// Angle in [0, pi) of the line spanned by a 2-d vector.
double line_angle(const Vec& v);

/// Distance between two lines through the origin, in [0, pi/2].
double line_distance(const Vec& a, const Vec& b);

/// Dense d x d matrix, d in {1, 2}.
struct Mat {
  int dim = 1;
  double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  static Mat identity(int dim);
  static Mat diag(double a, double b);

  Mat operator*(const Mat& rhs) const;
  Vec apply(const Vec& x) const;
  double det() const;
};

/// Largest singular value, closed form from the Frobenius norm and the
/// determinant: smax^2 = (F + sqrt(F^2 - 4 det^2)) / 2 with F = |M|_F^2.
double op_norm(const Mat& m);

/// Spectral norm of the inverse, smax(M) / |det M|. Throws
/// singular_matrix_error when |det| < det_floor.
double inv_norm(const Mat& m, double det_floor = 1e-12);

Mat inverse(const Mat& m, double det_floor = 1e-12);

/// Interval matrix (entrywise enclosure of a set of matrices).
struct IMat {
  int dim = 1;
  Interval m[2][2];

  static IMat from(const Mat& m);

  IMat operator*(const IMat& rhs) const;
  Interval det() const;
};

IMat ihull(const IMat& a, const IMat& b);

/// Interval containing |M^{-1}| for every matrix M in the enclosure. Throws
/// singular_matrix_error when the determinant interval contains zero.
Interval matrix_inv_norm_bound(const IMat& m);

/// Interval containing |M| (spectral norm) for every M in the enclosure.
Interval matrix_norm_bound(const IMat& m);

struct IVec {
  int dim = 1;
  Interval v[2];
};

IVec apply(const IMat& m, const Vec& x);
Interval ivec_norm(const IVec& x);

}  // namespace hypercert
