#pragma once

#include <utility>

#include "hypercert/interval.hpp"

namespace hypercert {

/// Point on S^1 = R/Z or T^2 = R^2/Z^2 (one or two coordinates in [0, 1)).
/// The two-point base space uses the representatives 0.0 and 0.5.
struct Point {
  int dim = 1;
  double c[2] = {0.0, 0.0};

  static Point circle(double x);
  static Point torus(double x, double y);
};

double reduce_mod1(double x);
Point reduce(const Point& p);
bool close_mod1(const Point& a, const Point& b, double tol);

/// Axis-aligned box on the phase space. An interval may extend past 1 to
/// describe an arc wrapping through 0 == 1 (canonical form keeps lo in
/// [0, 1) and width <= 1).
struct Box {
  int dim = 1;
  Interval iv[2];

  static Box full(int dim);
};

Box canonical(const Box& b);
bool box_contains(const Box& b, const Point& p);
bool box_subset(const Box& inner, const Box& outer);
bool box_is_full(const Box& b);
int longest_axis(const Box& b);
std::pair<Box, Box> bisect(const Box& b, int axis);
Point box_midpoint(const Box& b);

}  // namespace hypercert
