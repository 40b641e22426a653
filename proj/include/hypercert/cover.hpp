#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercert/constants.hpp"
#include "hypercert/enclosure.hpp"

namespace hypercert {

/// One cover box together with its certified return time N: the enclosure
/// of (1/N) sum_{j<N} phi(f^j y) over the box has upper endpoint < -rate,
/// with margin = -rate - (upper endpoint) > 0.
struct CoverEntry {
  Box box;
  int n = 1;
  double margin = 0.0;
};

struct WitnessBox {
  Box box;
  double best_upper = 0.0;  // lowest certified upper bound achieved, any N
  int depth = 0;
};

struct Provenance {
  std::string rounding = "ulp-outward";
  int n_max = 0;
  int depth_max = 0;
  int threads = 1;
  std::string tool_version;
};

struct SplittingInfo {
  std::string source;  // "exact" or "estimated"
  int iterations = 0;
  double residual = 0.0;  // sampled invariance residual
};

struct CoverCertificate {
  std::string system_id;
  std::map<std::string, double> params;
  std::string observable;
  double rate = 0.0;
  ExpansionConstants consts;
  std::vector<CoverEntry> entries;
  Provenance provenance;
  std::optional<SplittingInfo> splitting;
};

/// Refusal report: certification is one-sided, so this is evidence of where
/// it got stuck, not a disproof.
struct InconclusiveReport {
  std::string system_id;
  std::map<std::string, double> params;
  std::string observable;
  double rate = 0.0;
  int n_max = 0;
  int depth_max = 0;
  std::vector<WitnessBox> witnesses;
  int depth_reached = 0;
};

struct CoverParams {
  double rate = 0.0;
  int n_max = 32;
  int depth_max = 20;
  int threads = 1;  // <= 1 means sequential
};

/// Smallest N <= n_max whose enclosed orbit average over B has upper
/// endpoint < -rate; nullopt when no such N exists. best_upper, when
/// provided, receives the lowest upper endpoint achieved.
std::optional<CoverEntry> find_box_time(const MapSystem& sys, const Box& b,
                                        const Observable& phi, double rate,
                                        int n_max, double* best_upper = nullptr);

struct BuildResult {
  std::optional<CoverCertificate> certificate;
  std::optional<InconclusiveReport> inconclusive;
  bool ok() const { return certificate.has_value(); }
};

/// Adaptive bisection from the whole phase space: each box either receives
/// a CoverEntry or is split (longest axis, ties to the lowest index) up to
/// depth_max. Deterministic, independent of worker scheduling.
BuildResult build_cover(const SystemPtr& sys, const Observable& phi,
                        const CoverParams& params);

/// Accumulated return time N_k(x): N_0 = 0,
/// N_{k+1}(x) = N_k(x) + N_1(f^{N_k(x)} x), where N_1(y) is the minimal
/// entry time among cover boxes containing y. Throws certificate_error if
/// some orbit point is uncovered.
long schedule(const MapSystem& sys, const CoverCertificate& cert, const Point& x,
              long k);

/// Returns (actual, bound) with actual = sum_{j < m*n_bar} phi(f^j x) and
/// bound = -(c/2) m + c0.
std::pair<double, double> running_sum_bound(const MapSystem& sys,
                                          const CoverCertificate& cert,
                                          const Observable& phi, const Point& x,
                                          long m);

/// Worker count from the HYPERCERT_THREADS environment variable
/// (unset or 0 = auto).
int env_thread_count();

}  // namespace hypercert
