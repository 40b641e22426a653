#pragma once

#include "hypercert/splitting.hpp"
#include "hypercert/system.hpp"

namespace hypercert {

/// Uniform-expansion constants derived from cover data:
///   alpha_plus = max(alpha, 0), c0 = alpha_plus * n_bar, k = e^{c0},
///   rho = e^{-c/2}, sigma = rho^{-1/n_bar} > 1,
///   big_c = e^{-n_bar * alpha_plus} * rho / k.
struct ExpansionConstants {
  int n_bar = 1;
  double c = 0.0;
  double alpha = 0.0;
  double alpha_plus = 0.0;
  double c0 = 0.0;
  double k = 1.0;
  double rho = 0.0;
  double sigma = 0.0;
  double big_c = 0.0;
};

ExpansionConstants derive_constants(int n_bar, double c, double alpha);

/// Checks the four constant identities to within one ulp each.
bool constants_identities_hold(const ExpansionConstants& k);

struct VerifyReport {
  double min_ratio = 0.0;
  Point arg_x;
  long arg_n = 0;
  unsigned long long seed = 0;
  int samples = 0;
  long n_max = 0;
};

/// Samples random (x, unit v) and all n <= n_max, reporting the minimum of
/// |df_x^n v| / (C sigma^n |v|). A sound certificate yields min >= 1.
/// Uses exact cocycle products, independent of the interval engine.
VerifyReport verify_expansion(const MapSystem& sys, const ExpansionConstants& k,
                              int samples, long n_max, unsigned long long seed);

/// Directional variant. For the expanding side the ratio is
/// |df_x^n u| / (C sigma^n); for the contracting side it is
/// ((1/C) sigma^{-n}) / |df_x^n s|. Both must stay >= 1 for a sound
/// certificate.
VerifyReport verify_directional(const MapSystem& sys, const Splitting& splitting,
                                bool expanding_side, const ExpansionConstants& k,
                                int samples, long n_max, unsigned long long seed);

}  // namespace hypercert
