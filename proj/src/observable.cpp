#include "hypercert/observable.hpp"

#include <cmath>

namespace hypercert {

std::string observable_name(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::lambda: return "lambda";
    case ObservableKind::lambda_cu: return "lambda_cu";
    case ObservableKind::lambda_cs: return "lambda_cs";
    case ObservableKind::lambda_center: return "lambda_center";
  }
  throw usage_error("bad observable kind");
}

ObservableKind observable_from_name(const std::string& name) {
  if (name == "lambda") return ObservableKind::lambda;
  if (name == "lambda_cu" || name == "cu") return ObservableKind::lambda_cu;
  if (name == "lambda_cs" || name == "cs") return ObservableKind::lambda_cs;
  if (name == "lambda_center" || name == "center") return ObservableKind::lambda_center;
  throw usage_error("unknown observable '" + name + "'");
}

Observable Observable::lambda() {
  return Observable(ObservableKind::lambda, nullptr, 0);
}

Observable Observable::directional(ObservableKind kind,
                                   std::shared_ptr<const Splitting> splitting,
                                   int center_sign) {
  if (kind == ObservableKind::lambda)
    throw usage_error("lambda is not directional");
  if (!splitting)
    throw usage_error("directional observable requires a splitting");
  return Observable(kind, std::move(splitting), center_sign);
}

namespace {

const double kStretchFloor = 1e-12;

Vec direction_for(const Observable& phi, const SplittingDirs& dirs) {
  switch (phi.kind()) {
    case ObservableKind::lambda_cu: return dirs.u;
    case ObservableKind::lambda_cs: return dirs.s;
    case ObservableKind::lambda_center: return dirs.u;
    default: throw usage_error("not a directional observable");
  }
}

// Sign convention: lambda_cu and expanding-center certify expansion
// (-log stretch), lambda_cs and contracting-center certify contraction
// (+log stretch).
bool negate_log(const Observable& phi) {
  if (phi.kind() == ObservableKind::lambda_cu) return true;
  if (phi.kind() == ObservableKind::lambda_cs) return false;
  return phi.center_sign() >= 0;
}

}  // namespace

double Observable::operator()(const MapSystem& sys, const Point& x) const {
  Mat d = sys.deriv(x);
  if (kind_ == ObservableKind::lambda) return std::log(inv_norm(d));
  Vec dir = direction_for(*this, splitting_->dirs(x));
  double stretch = d.apply(dir).norm() / dir.norm();
  if (stretch < kStretchFloor)
    throw singular_matrix_error("degenerate directional stretch");
  double v = std::log(stretch);
  return negate_log(*this) ? -v : v;
}

Interval Observable::enclose(const MapSystem& sys, const Box& b) const {
  IMat d = sys.deriv_box(b);
  if (kind_ == ObservableKind::lambda) return ilog(matrix_inv_norm_bound(d));
  Vec dir = direction_for(*this, splitting_->dirs(box_midpoint(b)));
  Interval stretch = idiv(ivec_norm(apply(d, dir)), Interval::point(dir.norm()));
  if (stretch.lo <= kStretchFloor)
    throw singular_matrix_error("degenerate directional stretch over box");
  Interval v = ilog(stretch);
  return negate_log(*this) ? ineg(v) : v;
}

double birkhoff_sum(const MapSystem& sys, const Observable& phi, Point x, long n) {
  if (n < 1) throw usage_error("birkhoff sum requires n >= 1");
  double sum = 0.0, comp = 0.0;
  for (long j = 0; j < n; ++j) {
    double term = phi(sys, x) - comp;
    double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    x = sys.eval(x);
  }
  return sum;
}

double birkhoff_average(const MapSystem& sys, const Observable& phi, Point x, long n) {
  return birkhoff_sum(sys, phi, std::move(x), n) / static_cast<double>(n);
}

}  // namespace hypercert
