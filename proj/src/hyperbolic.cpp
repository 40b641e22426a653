#include "hypercert/hyperbolic.hpp"

#include <algorithm>

namespace hypercert {

HyperbolicResult certify_hyperbolic(const SystemPtr& sys,
                                    std::shared_ptr<const Splitting> splitting,
                                    double r_cu, double r_cs,
                                    const CoverParams& params) {
  if (!splitting) throw usage_error("hyperbolic certification needs a splitting");
  if (!(r_cu > 0.0) || !(r_cs > 0.0)) throw usage_error("rates must be positive");

  CoverParams p_cu = params;
  p_cu.rate = r_cu;
  CoverParams p_cs = params;
  p_cs.rate = r_cs;

  Observable phi_cu = Observable::directional(ObservableKind::lambda_cu, splitting);
  Observable phi_cs = Observable::directional(ObservableKind::lambda_cs, splitting);

  HyperbolicResult out;
  BuildResult cu = build_cover(sys, phi_cu, p_cu);
  if (!cu.ok()) out.cu_inconclusive = std::move(cu.inconclusive);
  BuildResult cs = build_cover(sys, phi_cs, p_cs);
  if (!cs.ok()) out.cs_inconclusive = std::move(cs.inconclusive);
  if (out.cu_inconclusive || out.cs_inconclusive) return out;

  HyperbolicCertificate cert;
  cert.cu = std::move(*cu.certificate);
  cert.cs = std::move(*cs.certificate);
  cert.combined_c = std::min(cert.cu.consts.big_c, cert.cs.consts.big_c);
  cert.combined_sigma = std::min(cert.cu.consts.sigma, cert.cs.consts.sigma);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace hypercert
