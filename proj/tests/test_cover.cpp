#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>

#include "hypercert/cover.hpp"
#include "hypercert/report.hpp"

using namespace hypercert;

namespace {

const double kLog2 = std::log(2.0);

std::mt19937_64 rng(46923001);

Point random_point(const MapSystem& sys) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (sys.space() == Space::two_point)
    return u(rng) < 0.5 ? two_point_p() : two_point_q();
  if (sys.base_dim() == 1) return Point::circle(u(rng));
  return Point::torus(u(rng), u(rng));
}

Point point_in(const Box& b) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Point x;
  x.dim = b.dim;
  for (int i = 0; i < b.dim; ++i)
    x.c[i] = reduce_mod1(b.iv[i].lo + u(rng) * b.iv[i].width());
  return x;
}

CoverCertificate certify_doubling() {
  CoverParams params;
  params.rate = 0.6;
  params.n_max = 8;
  params.depth_max = 20;
  BuildResult res = build_cover(make_system("doubling"), Observable::lambda(), params);
  REQUIRE(res.ok());
  return *res.certificate;
}

}  // namespace

TEST_CASE("find_box_time on the doubling map") {
  auto sys = make_system("doubling");
  auto entry =
      find_box_time(*sys, Box::full(1), Observable::lambda(), 0.6, 8);
  REQUIRE(entry.has_value());
  CHECK(entry->n == 1);
  CHECK(entry->margin == doctest::Approx(kLog2 - 0.6).epsilon(1e-9));
}

TEST_CASE("find_box_time refuses a box holding the neutral point") {
  auto sys = make_system("intermittent");
  Box b{1, {Interval{-0.01, 0.01}, Interval{}}};
  CHECK_FALSE(
      find_box_time(*sys, b, Observable::lambda(), 0.1, 16).has_value());
}

TEST_CASE("find_box_time on a perturbed arc") {
  auto sys = make_system("perturbed-doubling", {{"a", 0.05}});
  Box b{1, {Interval{0.0, 0.25}, Interval{}}};
  auto entry = find_box_time(*sys, b, Observable::lambda(), 0.65, 8);
  REQUIRE(entry.has_value());
  CHECK(entry->n == 1);
}

TEST_CASE("doubling cover certificate") {
  CoverCertificate cert = certify_doubling();
  CHECK(cert.entries.size() == 1);
  CHECK(cert.consts.n_bar == 1);
  CHECK(cert.consts.c == 1.2);
  CHECK(cert.consts.sigma == doctest::Approx(std::exp(0.6)).epsilon(1e-14));
}

TEST_CASE("intermittent map is never certified") {
  for (double rate : {0.01, 0.05, 0.1}) {
    CoverParams params;
    params.rate = rate;
    params.n_max = 100;
    params.depth_max = 3;
    BuildResult res =
        build_cover(make_system("intermittent"), Observable::lambda(), params);
    REQUIRE_FALSE(res.ok());
    REQUIRE(res.inconclusive.has_value());
    REQUIRE_FALSE(res.inconclusive->witnesses.empty());
    Point zero = Point::circle(0.0);
    for (const WitnessBox& w : res.inconclusive->witnesses)
      CHECK(box_contains(w.box, zero));
  }
}

TEST_CASE("schedule telescopes for an all-ones cover") {
  auto sys = make_system("doubling");
  CoverCertificate cert = certify_doubling();
  for (long k : {0L, 1L, 5L, 17L})
    CHECK(schedule(*sys, cert, Point::circle(0.37), k) == k);
}

TEST_CASE("schedule follows entry times on a synthetic cover") {
  auto sys = make_system("doubling");
  CoverCertificate cert = certify_doubling();
  // Two half-circle boxes with distinct times; orbit of 0.1 visits
  // [0, 0.5) (N = 2), then 0.2 again in [0, 0.5) ... exercise the mix.
  cert.entries.clear();
  cert.entries.push_back({Box{1, {Interval{0.0, 0.5}, Interval{}}}, 2, 0.1});
  cert.entries.push_back({Box{1, {Interval{0.5, 1.0}, Interval{}}}, 3, 0.1});
  cert.consts.n_bar = 3;
  // x = 0.1: N1 = 2 -> f^2(0.1) = 0.4: N1 = 2 -> f^4(0.1) = 0.6: N1 = 3.
  CHECK(schedule(*sys, cert, Point::circle(0.1), 0) == 0);
  CHECK(schedule(*sys, cert, Point::circle(0.1), 1) == 2);
  CHECK(schedule(*sys, cert, Point::circle(0.1), 2) == 4);
  CHECK(schedule(*sys, cert, Point::circle(0.1), 3) == 7);
}

TEST_CASE("schedule increments stay within the certificate range") {
  std::map<std::string, double> params{{"a", 0.05}};
  auto sys = make_system("perturbed-doubling", params);
  CoverParams cp;
  cp.rate = 0.6;
  cp.n_max = 32;
  cp.depth_max = 20;
  BuildResult res = build_cover(sys, Observable::lambda(), cp);
  REQUIRE(res.ok());
  const CoverCertificate& cert = *res.certificate;
  for (int trial = 0; trial < 50; ++trial) {
    Point x = random_point(*sys);
    long prev = 0;
    for (long k = 1; k <= 12; ++k) {
      long nk = schedule(*sys, cert, x, k);
      long inc = nk - prev;
      CHECK(inc >= 1);
      CHECK(inc <= cert.consts.n_bar);
      prev = nk;
    }
  }
}

TEST_CASE("uncovered point is a certificate error") {
  auto sys = make_system("doubling");
  CoverCertificate cert = certify_doubling();
  cert.entries.clear();
  cert.entries.push_back({Box{1, {Interval{0.0, 0.25}, Interval{}}}, 1, 0.05});
  CHECK_THROWS_AS(schedule(*sys, cert, Point::circle(0.9), 1), certificate_error);
}

TEST_CASE("running sum bound holds at issued certificates") {
  Observable lambda = Observable::lambda();
  struct CaseSpec {
    const char* id;
    double a;
    double rate;
  };
  for (const CaseSpec& cs :
       {CaseSpec{"doubling", 0.0, 0.6}, CaseSpec{"perturbed-doubling", 0.05, 0.6}}) {
    std::map<std::string, double> params;
    if (cs.a != 0.0) params["a"] = cs.a;
    auto sys = make_system(cs.id, params);
    CoverParams cp;
    cp.rate = cs.rate;
    cp.n_max = 32;
    cp.depth_max = 20;
    BuildResult res = build_cover(sys, lambda, cp);
    REQUIRE(res.ok());
    for (int trial = 0; trial < 1000; ++trial) {
      Point x = random_point(*sys);
      std::uniform_int_distribution<int> pick(1, 50);
      long m = pick(rng);
      auto [actual, bound] = running_sum_bound(*sys, *res.certificate, lambda, x, m);
      CHECK(actual <= bound + 1e-9);
    }
  }
}

TEST_CASE("doubling sum bound matches hand values") {
  auto sys = make_system("doubling");
  CoverCertificate cert = certify_doubling();
  auto [a10, b10] = running_sum_bound(*sys, cert, Observable::lambda(),
                                    Point::circle(0.123), 10);
  CHECK(a10 == doctest::Approx(-10.0 * kLog2).epsilon(1e-12));
  CHECK(b10 == doctest::Approx(-6.0).epsilon(1e-15));
  CHECK(a10 <= b10);
  auto [a1, b1] =
      running_sum_bound(*sys, cert, Observable::lambda(), Point::circle(0.123), 1);
  CHECK(a1 == doctest::Approx(-kLog2).epsilon(1e-12));
  CHECK(a1 <= -0.6);
  CHECK(b1 == doctest::Approx(-0.6).epsilon(1e-15));
}

TEST_CASE("entry soundness: pointwise averages beat the rate") {
  std::map<std::string, double> params{{"a", 0.05}};
  auto sys = make_system("perturbed-doubling", params);
  Observable lambda = Observable::lambda();
  CoverParams cp;
  cp.rate = 0.6;
  cp.n_max = 32;
  cp.depth_max = 20;
  BuildResult res = build_cover(sys, lambda, cp);
  REQUIRE(res.ok());
  for (const CoverEntry& entry : res.certificate->entries) {
    for (int trial = 0; trial < 100; ++trial) {
      Point y = point_in(entry.box);
      CHECK(birkhoff_average(*sys, lambda, y, entry.n) < -0.6);
    }
  }
}

TEST_CASE("determinism across thread counts") {
  std::map<std::string, double> params{{"a", 0.05}};
  Observable lambda = Observable::lambda();
  CoverParams cp;
  cp.rate = 0.6;
  cp.n_max = 32;
  cp.depth_max = 20;
  std::string first;
  for (int threads : {1, 1, 4, 8}) {
    cp.threads = threads;
    BuildResult res =
        build_cover(make_system("perturbed-doubling", params), lambda, cp);
    REQUIRE(res.ok());
    CoverCertificate cert = *res.certificate;
    cert.provenance.threads = 1;  // thread count is provenance, not content
    std::string bytes = dump_canonical(certificate_to_json(cert));
    if (first.empty())
      first = bytes;
    else
      CHECK(bytes == first);
  }
}

TEST_CASE("thread count from the environment") {
  setenv("HYPERCERT_THREADS", "3", 1);
  CHECK(env_thread_count() == 3);
  setenv("HYPERCERT_THREADS", "0", 1);
  CHECK(env_thread_count() >= 1);
  unsetenv("HYPERCERT_THREADS");
  CHECK(env_thread_count() >= 1);
}
