#pragma once

#include "hypercert/cover.hpp"
#include "hypercert/splitting.hpp"

namespace hypercert {

/// Uniform expansion along E^cu and uniform contraction along E^cs,
/// established by one cover certificate per direction. The combined pair
/// (C, sigma) = (min of the two C, min of the two sigma) works for both
/// inequalities simultaneously.
struct HyperbolicCertificate {
  CoverCertificate cu;
  CoverCertificate cs;
  double combined_c = 0.0;
  double combined_sigma = 0.0;
};

struct HyperbolicResult {
  std::optional<HyperbolicCertificate> certificate;
  std::optional<InconclusiveReport> cu_inconclusive;
  std::optional<InconclusiveReport> cs_inconclusive;
  bool ok() const { return certificate.has_value(); }
};

/// Runs build_cover on lambda^cu at rate r_cu and on lambda^cs at rate r_cs.
/// Both must certify; either failure surfaces that side's witness report.
HyperbolicResult certify_hyperbolic(const SystemPtr& sys,
                                    std::shared_ptr<const Splitting> splitting,
                                    double r_cu, double r_cs,
                                    const CoverParams& params);

}  // namespace hypercert
