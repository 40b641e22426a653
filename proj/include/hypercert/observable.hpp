#pragma once

#include <memory>
#include <string>

#include "hypercert/splitting.hpp"
#include "hypercert/system.hpp"

namespace hypercert {

enum class ObservableKind { lambda, lambda_cu, lambda_cs, lambda_center };

std::string observable_name(ObservableKind kind);
ObservableKind observable_from_name(const std::string& name);

/// Scalar observable along orbits:
///   lambda      log |(df_x)^{-1}|             (spectral norm of the inverse)
///   lambda_cu   log |(df_x restricted to E^cu)^{-1}| = -log(stretch along E^cu)
///   lambda_cs   log |df_x restricted to E^cs|
///   lambda_center  directional value on the center line, sign selectable
/// Immutable; pointwise evaluation uses exact arithmetic, box evaluation the
/// interval oracles. For estimated splittings the box direction is frozen at
/// the box midpoint, so enclosures are conditional on splitting accuracy.
class Observable {
 public:
  static Observable lambda();
  static Observable directional(ObservableKind kind,
                                std::shared_ptr<const Splitting> splitting,
                                int center_sign = +1);

  ObservableKind kind() const { return kind_; }
  const std::shared_ptr<const Splitting>& splitting() const { return splitting_; }
  int center_sign() const { return center_sign_; }
  std::string name() const { return observable_name(kind_); }

  double operator()(const MapSystem& sys, const Point& x) const;
  Interval enclose(const MapSystem& sys, const Box& b) const;

 private:
  Observable(ObservableKind kind, std::shared_ptr<const Splitting> splitting,
             int center_sign)
      : kind_(kind), splitting_(std::move(splitting)), center_sign_(center_sign) {}

  ObservableKind kind_;
  std::shared_ptr<const Splitting> splitting_;
  int center_sign_;
};

/// (1/n) sum_{j<n} phi(f^j x), compensated summation.
double birkhoff_average(const MapSystem& sys, const Observable& phi, Point x, long n);

/// sum_{j<n} phi(f^j x), compensated summation.
double birkhoff_sum(const MapSystem& sys, const Observable& phi, Point x, long n);

}  // namespace hypercert
