#include "hypercert/constants.hpp"

#include <cmath>
#include <random>

namespace hypercert {

ExpansionConstants derive_constants(int n_bar, double c, double alpha) {
  if (n_bar < 1) throw usage_error("n_bar must be >= 1");
  if (!(c > 0.0)) throw usage_error("c must be positive");
  ExpansionConstants k;
  k.n_bar = n_bar;
  k.c = c;
  k.alpha = alpha;
  k.alpha_plus = std::max(alpha, 0.0);
  k.c0 = k.alpha_plus * n_bar;
  k.k = std::exp(k.c0);
  k.rho = std::exp(-c / 2.0);
  k.sigma = n_bar == 1 ? 1.0 / k.rho : std::pow(k.rho, -1.0 / n_bar);
  k.big_c = std::exp(-n_bar * k.alpha_plus) * k.rho / k.k;
  return k;
}

namespace {

bool within_one_ulp(double a, double b) {
  return a == b || std::nextafter(a, b) == b;
}

}  // namespace

bool constants_identities_hold(const ExpansionConstants& k) {
  if (!(k.c > 0.0) || k.n_bar < 1) return false;
  ExpansionConstants r = derive_constants(k.n_bar, k.c, k.alpha);
  return within_one_ulp(k.alpha_plus, r.alpha_plus) &&
         within_one_ulp(k.c0, r.c0) && within_one_ulp(k.k, r.k) &&
         within_one_ulp(k.rho, r.rho) && within_one_ulp(k.sigma, r.sigma) &&
         within_one_ulp(k.big_c, r.big_c);
}

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

Point random_point(const MapSystem& sys, std::mt19937_64& rng) {
  if (sys.space() == Space::two_point)
    return (rng() & 1u) ? two_point_q() : two_point_p();
  Point p;
  p.dim = sys.base_dim();
  for (int i = 0; i < p.dim; ++i) p.c[i] = unit_double(rng);
  return p;
}

Vec random_unit(int dim, std::mt19937_64& rng) {
  Vec v;
  v.dim = dim;
  if (dim == 1) {
    v.v[0] = 1.0;
    return v;
  }
  const double kPi = 3.14159265358979323846;
  double theta = unit_double(rng) * 2.0 * kPi;
  v.v[0] = std::cos(theta);
  v.v[1] = std::sin(theta);
  return v;
}

template <typename RatioFn>
VerifyReport sample_min_ratio(const MapSystem& sys, int samples, long n_max,
                              unsigned long long seed, RatioFn&& make_state) {
  if (samples < 1 || n_max < 1)
    throw usage_error("verification requires samples >= 1 and n_max >= 1");
  std::mt19937_64 rng(seed);
  VerifyReport rep;
  rep.seed = seed;
  rep.samples = samples;
  rep.n_max = n_max;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Point x = random_point(sys, rng);
    auto state = make_state(x, rng);
    Point y = x;
    for (long n = 1; n <= n_max; ++n) {
      double ratio = state.step(sys, y, n);
      y = sys.eval(y);
      if (ratio < rep.min_ratio) {
        rep.min_ratio = ratio;
        rep.arg_x = x;
        rep.arg_n = n;
      }
    }
  }
  return rep;
}

struct ExpansionState {
  Vec w;
  double denom;
  double sigma;

  double step(const MapSystem& sys, const Point& y, long) {
    w = sys.deriv(y).apply(w);
    denom *= sigma;
    return w.norm() / denom;
  }
};

}  // namespace

VerifyReport verify_expansion(const MapSystem& sys, const ExpansionConstants& k,
                              int samples, long n_max, unsigned long long seed) {
  return sample_min_ratio(sys, samples, n_max, seed,
                          [&](const Point&, std::mt19937_64& rng) {
                            return ExpansionState{random_unit(sys.dim(), rng),
                                                  k.big_c, k.sigma};
                          });
}

VerifyReport verify_directional(const MapSystem& sys, const Splitting& splitting,
                                bool expanding_side, const ExpansionConstants& k,
                                int samples, long n_max, unsigned long long seed) {
  // df carries E(y) to E(fy), so the restricted cocycle norm is the product
  // of one-step stretches along the bundle. Following the bundle per step
  // keeps the contracting side meaningful: a fixed starting vector would be
  // taken over by its rounding-level unstable component within ~20 steps.
  struct DirectionalState {
    const Splitting* sp;
    bool expanding;
    double prod = 1.0;
    double bound;  // C on the expanding side, 1/C on the contracting side
    double sigma;

    double step(const MapSystem& sys, const Point& y, long) {
      SplittingDirs dirs = sp->dirs(y);
      const Vec& dir = expanding ? dirs.u : dirs.s;
      double stretch = sys.deriv(y).apply(dir).norm() / dir.norm();
      prod *= stretch;
      if (expanding) {
        bound *= sigma;
        return prod / bound;  // |df^n u| / (C sigma^n)
      }
      bound /= sigma;
      return bound / prod;  // ((1/C) sigma^{-n}) / |df^n s|
    }
  };
  return sample_min_ratio(
      sys, samples, n_max, seed, [&](const Point&, std::mt19937_64&) {
        return DirectionalState{&splitting, expanding_side,
                                1.0,
                                expanding_side ? k.big_c : 1.0 / k.big_c,
                                k.sigma};
      });
}

}  // namespace hypercert
