#include "hypercert/system.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hypercert {

namespace {
const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;
}  // namespace

Point MapSystem::inverse(const Point&) const {
  throw unsupported_error("system '" + id_ + "' has no inverse branch");
}

double MapSystem::lift(double) const {
  throw unsupported_error("system '" + id_ + "' has no circle lift");
}

SplittingDirs MapSystem::exact_splitting(const Point&) const {
  throw unsupported_error("system '" + id_ + "' provides no exact splitting");
}

namespace {

// f(x) = 2x + a sin(2 pi x) mod 1. Covers `doubling` (a = 0),
// `perturbed-doubling(a)` and `intermittent` (a = -1/(2 pi)).
class CircleFamily final : public MapSystem {
 public:
  CircleFamily(std::string id, std::map<std::string, double> params, double a)
      : MapSystem(std::move(id), std::move(params), Space::circle, 1, 1, 2, false),
        a_(a) {
    if (!(std::fabs(a) <= 1.0 / kTwoPi))
      throw usage_error("parameter a must satisfy |a| <= 1/(2*pi)");
  }

  double lift(double x) const override {
    return a_ == 0.0 ? 2.0 * x : 2.0 * x + a_ * std::sin(kTwoPi * x);
  }

  Point eval(const Point& x) const override {
    return Point::circle(lift(x.c[0]));
  }

  Mat deriv(const Point& x) const override {
    Mat m;
    m.dim = 1;
    m.m[0][0] = a_ == 0.0 ? 2.0 : 2.0 + kTwoPi * a_ * std::cos(kTwoPi * x.c[0]);
    return m;
  }

  Box eval_box(const Box& b) const override {
    Box r;
    r.dim = 1;
    Interval img = iscale(b.iv[0], 2.0);
    if (a_ != 0.0)
      img = iadd(img, iscale(isin(imul(b.iv[0], itwo_pi())), a_));
    r.iv[0] = img;
    return canonical(r);
  }

  IMat deriv_box(const Box& b) const override {
    IMat m;
    m.dim = 1;
    if (a_ == 0.0) {
      m.m[0][0] = Interval::point(2.0);
    } else {
      Interval c = icos(imul(b.iv[0], itwo_pi()));
      m.m[0][0] = ishift(imul(c, iscale(itwo_pi(), a_)), 2.0);
    }
    return m;
  }

 private:
  double a_;
};

// Toral automorphism with matrix rows (2,1),(1,1), optionally precomposed
// with the shear (x, y) -> (x + a sin(2 pi y), y).
class CatFamily final : public MapSystem {
 public:
  CatFamily(std::string id, std::map<std::string, double> params, double a)
      : MapSystem(std::move(id), std::move(params), Space::torus, 2, 2, 0, true),
        a_(a) {}

  Point eval(const Point& p) const override {
    double x = p.c[0], y = p.c[1];
    if (a_ != 0.0) x += a_ * std::sin(kTwoPi * y);
    return Point::torus(2.0 * x + y, x + y);
  }

  Mat deriv(const Point& p) const override {
    Mat m;
    m.dim = 2;
    double s = a_ == 0.0 ? 0.0 : kTwoPi * a_ * std::cos(kTwoPi * p.c[1]);
    // A * [[1, s], [0, 1]] with A = (2,1; 1,1)
    m.m[0][0] = 2.0;
    m.m[0][1] = 2.0 * s + 1.0;
    m.m[1][0] = 1.0;
    m.m[1][1] = s + 1.0;
    return m;
  }

  Box eval_box(const Box& b) const override {
    Interval x = b.iv[0], y = b.iv[1];
    if (a_ != 0.0) x = iadd(x, iscale(isin(imul(y, itwo_pi())), a_));
    Box r;
    r.dim = 2;
    r.iv[0] = iadd(iscale(x, 2.0), y);
    r.iv[1] = iadd(x, y);
    return canonical(r);
  }

  IMat deriv_box(const Box& b) const override {
    IMat m;
    m.dim = 2;
    Interval s = Interval::point(0.0);
    if (a_ != 0.0)
      s = imul(icos(imul(b.iv[1], itwo_pi())), iscale(itwo_pi(), a_));
    m.m[0][0] = Interval::point(2.0);
    m.m[0][1] = ishift(iscale(s, 2.0), 1.0);
    m.m[1][0] = Interval::point(1.0);
    m.m[1][1] = ishift(s, 1.0);
    return m;
  }

  Point inverse(const Point& p) const override {
    // A^{-1} = (1,-1; -1,2), then undo the shear.
    double u = reduce_mod1(p.c[0] - p.c[1]);
    double v = reduce_mod1(2.0 * p.c[1] - p.c[0]);
    if (a_ != 0.0) u = reduce_mod1(u - a_ * std::sin(kTwoPi * v));
    return Point::torus(u, v);
  }

  bool has_exact_splitting() const override { return a_ == 0.0; }

  SplittingDirs exact_splitting(const Point&) const override {
    // Eigenvectors of (2,1; 1,1): (1, (sqrt(5)-1)/2) and (1, -(1+sqrt(5))/2).
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    SplittingDirs d;
    d.u.dim = 2;
    d.u.v[0] = 1.0;
    d.u.v[1] = g;
    d.s.dim = 2;
    d.s.v[0] = 1.0;
    d.s.v[1] = -(1.0 + std::sqrt(5.0)) / 2.0;
    d.u = normalize(d.u);
    d.s = normalize(d.s);
    return d;
  }

 private:
  double a_;
};

bool atom_is_q(double c) { return c >= 0.25; }

// Two-point base {p, q} swapped by f, with df_p = diag(1/2, 3) and
// df_q = diag(3, 1/2). Each atom is its own box; the box [0, 0.5]
// denotes both atoms.
class Period2Cocycle final : public MapSystem {
 public:
  Period2Cocycle()
      : MapSystem("period2-cocycle", {}, Space::two_point, 2, 1, 0, true) {}

  Point eval(const Point& p) const override {
    return atom_is_q(p.c[0]) ? two_point_p() : two_point_q();
  }

  Mat deriv(const Point& p) const override {
    return atom_is_q(p.c[0]) ? Mat::diag(3.0, 0.5) : Mat::diag(0.5, 3.0);
  }

  Box eval_box(const Box& b) const override {
    bool has_p = b.iv[0].contains(0.0);
    bool has_q = b.iv[0].contains(0.5);
    Box r;
    r.dim = 1;
    if (has_p && has_q) {
      r.iv[0] = {0.0, 0.5};
    } else if (has_p) {
      r.iv[0] = Interval::point(0.5);
    } else {
      r.iv[0] = Interval::point(0.0);
    }
    return r;
  }

  IMat deriv_box(const Box& b) const override {
    bool has_p = b.iv[0].contains(0.0);
    bool has_q = b.iv[0].contains(0.5);
    IMat dp = IMat::from(Mat::diag(0.5, 3.0));
    IMat dq = IMat::from(Mat::diag(3.0, 0.5));
    if (has_p && has_q) return ihull(dp, dq);
    return has_q ? dq : dp;
  }

  Point inverse(const Point& p) const override { return eval(p); }

  bool has_exact_splitting() const override { return true; }

  SplittingDirs exact_splitting(const Point&) const override {
    SplittingDirs d;
    d.u.dim = 2;
    d.u.v[0] = 0.0;
    d.u.v[1] = 1.0;
    d.s.dim = 2;
    d.s.v[0] = 1.0;
    d.s.v[1] = 0.0;
    return d;
  }
};

double require_param(const std::map<std::string, double>& params,
                     const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw usage_error("missing parameter '" + key + "'");
  return it->second;
}

void require_no_params(const std::map<std::string, double>& params,
                       const std::string& id) {
  if (!params.empty())
    throw usage_error("system '" + id + "' takes no parameters");
}

}  // namespace

Point two_point_p() {
  Point p;
  p.dim = 1;
  p.c[0] = 0.0;
  return p;
}

Point two_point_q() {
  Point p;
  p.dim = 1;
  p.c[0] = 0.5;
  return p;
}

SystemPtr make_system(const std::string& id,
                      const std::map<std::string, double>& params) {
  if (id == "doubling") {
    require_no_params(params, id);
    return std::make_shared<CircleFamily>(id, params, 0.0);
  }
  if (id == "perturbed-doubling") {
    double a = require_param(params, "a");
    if (!(std::fabs(a) < 1.0 / kTwoPi))
      throw usage_error("perturbed-doubling requires |a| < 1/(2*pi)");
    return std::make_shared<CircleFamily>(id, params, a);
  }
  if (id == "intermittent") {
    require_no_params(params, id);
    return std::make_shared<CircleFamily>(id, params, -1.0 / kTwoPi);
  }
  if (id == "cat") {
    require_no_params(params, id);
    return std::make_shared<CatFamily>(id, params, 0.0);
  }
  if (id == "perturbed-cat") {
    double a = require_param(params, "a");
    if (!std::isfinite(a))
      throw usage_error("perturbed-cat requires a finite shear amplitude");
    return std::make_shared<CatFamily>(id, params, a);
  }
  if (id == "period2-cocycle") {
    require_no_params(params, id);
    return std::make_shared<Period2Cocycle>();
  }
  throw usage_error("unknown system '" + id + "'");
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw usage_error("malformed parameter '" + item + "', expected key=value");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    char* end = nullptr;
    double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0')
      throw usage_error("malformed parameter value '" + val + "'");
    out[key] = v;
  }
  return out;
}

std::vector<GalleryInfo> gallery() {
  return {
      {"doubling", "", "x -> 2x mod 1 on the circle"},
      {"perturbed-doubling", "a (|a| < 1/(2*pi))",
       "x -> 2x + a sin(2 pi x) mod 1 on the circle"},
      {"intermittent", "",
       "x -> 2x - sin(2 pi x)/(2 pi) mod 1; neutral fixed point at 0"},
      {"cat", "", "toral automorphism with matrix rows (2,1),(1,1)"},
      {"perturbed-cat", "a (small shear amplitude)",
       "cat map precomposed with the shear (x, y) -> (x + a sin(2 pi y), y)"},
      {"period2-cocycle", "",
       "two-point base {p, q} with df_p = diag(1/2, 3), df_q = diag(3, 1/2)"},
  };
}

Point evaluate(const MapSystem& sys, Point x, long n) {
  for (long i = 0; i < n; ++i) x = sys.eval(x);
  return x;
}

Mat tangent_map(const MapSystem& sys, const Point& x, long n) {
  if (n < 1) throw usage_error("tangent_map requires n >= 1");
  Point y = x;
  Mat prod = sys.deriv(y);
  for (long i = 1; i < n; ++i) {
    y = sys.eval(y);
    prod = sys.deriv(y) * prod;
  }
  return prod;
}

}  // namespace hypercert
