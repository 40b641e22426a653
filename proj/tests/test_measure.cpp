#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hypercert/measure.hpp"

using namespace hypercert;

namespace {
const double kLog2 = std::log(2.0);
std::mt19937_64 rng(31337);
}  // namespace

TEST_CASE("integration equals the Birkhoff average") {
  Observable lambda = Observable::lambda();
  auto doubling = make_system("doubling");
  EmpiricalMeasure mu{Point::circle(1.0 / 3.0), 2};
  CHECK(integrate(*doubling, mu, lambda) == doctest::Approx(-kLog2).epsilon(1e-15));

  auto p2 = make_system("period2-cocycle");
  EmpiricalMeasure nu{two_point_p(), 2};
  CHECK(integrate(*p2, nu, lambda) == doctest::Approx(kLog2).epsilon(1e-15));
}

TEST_CASE("integrate agrees with birkhoff_average to one ulp") {
  Observable lambda = Observable::lambda();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const GalleryInfo& info : gallery()) {
    std::map<std::string, double> params;
    if (info.id == "perturbed-doubling" || info.id == "perturbed-cat")
      params["a"] = 0.03;
    auto sys = make_system(info.id, params);
    Point x;
    if (sys->space() == Space::two_point)
      x = two_point_p();
    else if (sys->base_dim() == 1)
      x = Point::circle(u(rng));
    else
      x = Point::torus(u(rng), u(rng));
    for (long n : {1L, 7L, 40L}) {
      double a = integrate(*sys, EmpiricalMeasure{x, n}, lambda);
      double b = birkhoff_average(*sys, lambda, x, n);
      CHECK(std::fabs(a - b) <= std::ldexp(std::fabs(b), -52));
    }
  }
}

TEST_CASE("invariance defect telescopes exactly") {
  Observable lambda = Observable::lambda();
  auto sys = make_system("perturbed-doubling", {{"a", 0.04}});
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Point x = Point::circle(u(rng));
    long n = 1 + static_cast<long>(u(rng) * 50);
    double defect = invariance_defect(*sys, EmpiricalMeasure{x, n}, lambda);
    double direct =
        std::fabs(lambda(*sys, evaluate(*sys, x, n)) - lambda(*sys, x)) / n;
    CHECK(std::fabs(defect - direct) <= std::ldexp(std::fabs(direct), -52));
  }
}

TEST_CASE("defect vanishes on closed orbit segments") {
  Observable lambda = Observable::lambda();
  auto p2 = make_system("period2-cocycle");
  CHECK(invariance_defect(*p2, EmpiricalMeasure{two_point_p(), 2}, lambda) == 0.0);

  auto inter = make_system("intermittent");
  CHECK(invariance_defect(*inter, EmpiricalMeasure{Point::circle(0.0), 17},
                          lambda) == 0.0);
}

TEST_CASE("defect decays like the telescoping bound") {
  Observable lambda = Observable::lambda();
  auto sys = make_system("doubling");
  // lambda is constant, so the defect is exactly 0 at every length.
  CHECK(invariance_defect(*sys, EmpiricalMeasure{Point::circle(0.123), 1000},
                          lambda) == 0.0);
  // On the perturbed map lambda has range within [-log(2+0.1pi), -log(2-0.1pi)].
  auto pd = make_system("perturbed-doubling", {{"a", 0.05}});
  double d = invariance_defect(*pd, EmpiricalMeasure{Point::circle(0.123), 1000},
                               lambda);
  double span = std::log(2.0 + 0.1 * 3.15) - std::log(2.0 - 0.1 * 3.15);
  CHECK(d <= span / 1000.0);
}

TEST_CASE("limit estimate tracks the tail minimum") {
  Observable lambda = Observable::lambda();
  auto sys = make_system("doubling");
  BirkhoffLimitEstimate est =
      birkhoff_limit_estimate(*sys, lambda, Point::circle(0.77), 100);
  REQUIRE(est.running_averages.size() == 100);
  double tail_min = est.running_averages[0];
  for (double a : est.running_averages) tail_min = std::min(tail_min, a);
  CHECK(est.liminf_estimate == tail_min);
  CHECK(est.liminf_estimate == doctest::Approx(-kLog2).epsilon(1e-13));

  BirkhoffLimitEstimate tail =
      birkhoff_limit_estimate(*sys, lambda, Point::circle(0.77), 100, 50);
  double expected = tail.running_averages[49];
  for (size_t i = 49; i < 100; ++i)
    expected = std::min(expected, tail.running_averages[i]);
  CHECK(tail.liminf_estimate == expected);
}

TEST_CASE("argument validation") {
  Observable lambda = Observable::lambda();
  auto sys = make_system("doubling");
  CHECK_THROWS_AS(integrate(*sys, EmpiricalMeasure{Point::circle(0.0), 0}, lambda),
                  usage_error);
  CHECK_THROWS_AS(
      birkhoff_limit_estimate(*sys, lambda, Point::circle(0.0), 10, 11),
      usage_error);
}
