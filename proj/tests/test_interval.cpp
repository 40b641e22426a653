#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hypercert/interval.hpp"

using namespace hypercert;

namespace {

std::mt19937_64 rng(20240817);

double sample_in(const Interval& iv) {
  std::uniform_real_distribution<double> d(iv.lo, iv.hi);
  return d(rng);
}

Interval random_interval(double lo, double hi, double max_width) {
  std::uniform_real_distribution<double> d(lo, hi);
  double a = d(rng), b = d(rng);
  if (a > b) std::swap(a, b);
  if (b - a > max_width) b = a + max_width;
  return {a, b};
}

}  // namespace

TEST_CASE("endpoint arithmetic") {
  Interval a{1.0, 2.0}, b{-1.0, 1.0};
  Interval s = iadd(a, b);
  CHECK(s.lo <= 0.0);
  CHECK(s.hi >= 3.0);
  CHECK(s.lo == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.hi == doctest::Approx(3.0).epsilon(1e-15));

  Interval d = isub(a, b);
  CHECK(d.contains(1.0 - 1.0));
  CHECK(d.contains(2.0 + 1.0));

  Interval m = imul(a, b);
  CHECK(m.contains(-2.0));
  CHECK(m.contains(2.0));
}

TEST_CASE("log is monotone and guarded") {
  Interval l = ilog({1.0, 2.0});
  CHECK(l.contains(0.0));
  CHECK(l.contains(std::log(2.0)));
  CHECK(l.hi <= 0.693148);
  CHECK_THROWS_AS(ilog({0.0, 1.0}), interval_domain_error);
  CHECK_THROWS_AS(ilog({-1.0, 1.0}), interval_domain_error);
}

TEST_CASE("division by zero-straddling interval is refused") {
  CHECK_THROWS_AS(idiv({1.0, 2.0}, {-1.0, 1.0}), interval_domain_error);
  Interval q = idiv({1.0, 2.0}, {2.0, 4.0});
  CHECK(q.contains(0.25));
  CHECK(q.contains(1.0));
}

TEST_CASE("cos over a quarter period") {
  const double two_pi = 2.0 * 3.14159265358979323846;
  Interval c = icos({0.0, 0.25 * two_pi});
  // The right endpoint is the nearest double to pi/2, where cos ~ 6e-17.
  CHECK(c.lo <= 1e-15);
  CHECK(c.lo >= -1e-9);
  CHECK(c.contains(1.0));
  CHECK(c.hi == 1.0);
}

TEST_CASE("sin and cos hit interior extrema") {
  const double pi = 3.14159265358979323846;
  Interval s = isin({pi / 4.0, 3.0 * pi / 4.0});
  CHECK(s.hi == 1.0);
  CHECK(s.lo <= std::sin(pi / 4.0));
  Interval c = icos({pi / 2.0, 3.0 * pi / 2.0});
  CHECK(c.lo == -1.0);
  Interval wide = isin({0.0, 10.0});
  CHECK(wide.lo == -1.0);
  CHECK(wide.hi == 1.0);
}

TEST_CASE("sqrt and exp enclose") {
  Interval r = isqrt({4.0, 9.0});
  CHECK(r.contains(2.0));
  CHECK(r.contains(3.0));
  CHECK_THROWS_AS(isqrt({-1.0, 1.0}), interval_domain_error);
  Interval e = iexp({0.0, 1.0});
  CHECK(e.contains(1.0));
  CHECK(e.contains(std::exp(1.0)));
  CHECK(e.lo >= 0.0);
}

TEST_CASE("randomized containment for elementary operations") {
  const int kTrials = 20000;
  for (int t = 0; t < kTrials; ++t) {
    Interval a = random_interval(-10.0, 10.0, 3.0);
    Interval b = random_interval(-10.0, 10.0, 3.0);
    double x = sample_in(a), y = sample_in(b);

    CHECK(iadd(a, b).contains(x + y));
    CHECK(isub(a, b).contains(x - y));
    CHECK(imul(a, b).contains(x * y));
    if (!(b.lo <= 0.0 && 0.0 <= b.hi)) CHECK(idiv(a, b).contains(x / y));
    CHECK(isqr(a).contains(x * x));
    CHECK(iabs(a).contains(std::fabs(x)));
    CHECK(isin(a).contains(std::sin(x)));
    CHECK(icos(a).contains(std::cos(x)));
    if (a.lo > 0.0) {
      CHECK(ilog(a).contains(std::log(x)));
      CHECK(isqrt(a).contains(std::sqrt(x)));
    }
    if (a.hi < 30.0) CHECK(iexp(a).contains(std::exp(x)));
  }
}

TEST_CASE("hull, scale, shift") {
  Interval h = ihull({0.0, 1.0}, {2.0, 3.0});
  CHECK(h.lo == 0.0);
  CHECK(h.hi == 3.0);
  CHECK(iscale({1.0, 2.0}, -2.0).contains(-4.0));
  CHECK(ishift({1.0, 2.0}, 0.5).contains(2.5));
  CHECK(itwo_pi().contains(2.0 * 3.14159265358979323846));
}
