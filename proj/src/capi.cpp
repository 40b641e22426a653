#include "hypercert/hypercert.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <vector>

#include "hypercert/report.hpp"
#include "hypercert/version.hpp"

namespace {

using namespace hypercert;

thread_local std::string g_last_error;

char* heap_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const usage_error& e) {
    return fail(HC_ERR_USAGE, e.what());
  } catch (const certificate_error& e) {
    return fail(HC_ERR_CERTIFICATE, e.what());
  } catch (const unsupported_error& e) {
    return fail(HC_ERR_UNSUPPORTED, e.what());
  } catch (const interval_domain_error& e) {
    return fail(HC_ERR_DOMAIN, e.what());
  } catch (const singular_matrix_error& e) {
    return fail(HC_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(HC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HC_ERR_INTERNAL, "unknown error");
  }
}

std::shared_ptr<const Splitting> splitting_for(const SystemPtr& sys,
                                               int splitting_iters) {
  if (splitting_iters > 0) return Splitting::estimated(sys, splitting_iters);
  if (sys->has_exact_splitting()) return Splitting::exact(sys);
  return Splitting::estimated(sys, 30);
}

int resolve_threads(int threads) {
  return threads > 0 ? threads : env_thread_count();
}

}  // namespace

extern "C" {

struct hc_system {
  SystemPtr sys;
};

const char* hc_version(void) { return kToolVersion; }

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

int hc_system_create(const char* id, const char* const* params, int n_params,
                     hc_system** out) {
  return guarded([&]() -> int {
    if (!id || !out || (n_params > 0 && !params))
      throw usage_error("null argument to hc_system_create");
    std::vector<std::string> items;
    for (int i = 0; i < n_params; ++i) {
      if (!params[i]) throw usage_error("null parameter string");
      items.emplace_back(params[i]);
    }
    *out = new hc_system{make_system(id, parse_params(items))};
    return HC_OK;
  });
}

void hc_system_destroy(hc_system* sys) { delete sys; }

int hc_gallery_json(char** out_json) {
  return guarded([&]() -> int {
    if (!out_json) throw usage_error("null output pointer");
    ordered_json arr = ordered_json::array();
    for (const GalleryInfo& info : gallery())
      arr.push_back({{"id", info.id},
                     {"params", info.params_desc},
                     {"description", info.desc}});
    *out_json = heap_string(dump_canonical(arr));
    return HC_OK;
  });
}

int hc_certify(const hc_system* sys, const char* observable, double rate,
               int n_max, int depth_max, int threads, int splitting_iters,
               char** out_json) {
  return guarded([&]() -> int {
    if (!sys || !observable || !out_json)
      throw usage_error("null argument to hc_certify");
    ObservableKind kind = observable_from_name(observable);
    Observable phi = kind == ObservableKind::lambda
                         ? Observable::lambda()
                         : Observable::directional(
                               kind, splitting_for(sys->sys, splitting_iters));
    CoverParams params;
    params.rate = rate;
    params.n_max = n_max;
    params.depth_max = depth_max;
    params.threads = resolve_threads(threads);
    BuildResult res = build_cover(sys->sys, phi, params);
    if (res.ok()) {
      *out_json = heap_string(dump_canonical(certificate_to_json(*res.certificate)));
      return HC_OK;
    }
    *out_json = heap_string(dump_canonical(inconclusive_to_json(*res.inconclusive)));
    return fail(HC_INCONCLUSIVE, "no certificate at the requested rate");
  });
}

int hc_certify_hyperbolic(const hc_system* sys, double r_cu, double r_cs,
                          int n_max, int depth_max, int threads,
                          int splitting_iters, char** out_json) {
  return guarded([&]() -> int {
    if (!sys || !out_json) throw usage_error("null argument");
    CoverParams params;
    params.rate = r_cu;
    params.n_max = n_max;
    params.depth_max = depth_max;
    params.threads = resolve_threads(threads);
    HyperbolicResult res = certify_hyperbolic(
        sys->sys, splitting_for(sys->sys, splitting_iters), r_cu, r_cs, params);
    if (res.ok()) {
      *out_json = heap_string(dump_canonical(hyperbolic_to_json(*res.certificate)));
      return HC_OK;
    }
    ordered_json j = ordered_json::object();
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "hyperbolic-inconclusive";
    if (res.cu_inconclusive) j["cu"] = inconclusive_to_json(*res.cu_inconclusive);
    if (res.cs_inconclusive) j["cs"] = inconclusive_to_json(*res.cs_inconclusive);
    *out_json = heap_string(dump_canonical(j));
    return fail(HC_INCONCLUSIVE, "no hyperbolic certificate at the requested rates");
  });
}

int hc_falsify(const hc_system* sys, int period_max, char** out_json) {
  return guarded([&]() -> int {
    if (!sys || !out_json) throw usage_error("null argument to hc_falsify");
    auto witness =
        falsify_total_probability(*sys->sys, Observable::lambda(), period_max);
    if (!witness) {
      *out_json = nullptr;
      return fail(HC_NOT_FOUND,
                  "every periodic orbit has strictly negative average");
    }
    *out_json = heap_string(dump_canonical(witness_to_json(*sys->sys, *witness)));
    return HC_OK;
  });
}

namespace {

VerifyReport verify_cover_document(const CoverCertificate& cert, int samples,
                                   long n_max, unsigned long long seed) {
  SystemPtr sys = make_system(cert.system_id, cert.params);
  if (cert.observable == "lambda")
    return verify_expansion(*sys, cert.consts, samples, n_max, seed);
  std::shared_ptr<const Splitting> sp =
      (cert.splitting && cert.splitting->source == "estimated")
          ? Splitting::estimated(sys, cert.splitting->iterations)
          : Splitting::exact(sys);
  if (cert.observable == "lambda_cu")
    return verify_directional(*sys, *sp, true, cert.consts, samples, n_max, seed);
  if (cert.observable == "lambda_cs")
    return verify_directional(*sys, *sp, false, cert.consts, samples, n_max, seed);
  throw unsupported_error("verification is not defined for observable '" +
                          cert.observable + "'");
}

ordered_json verify_report_json(const VerifyReport& rep) {
  ordered_json j = ordered_json::object();
  j["kind"] = "verify-report";
  j["min_ratio"] = hex_double(rep.min_ratio);
  j["samples"] = rep.samples;
  j["n_max"] = rep.n_max;
  j["seed"] = rep.seed;
  ordered_json coords = ordered_json::array();
  for (int i = 0; i < rep.arg_x.dim; ++i) coords.push_back(hex_double(rep.arg_x.c[i]));
  j["arg_x"] = std::move(coords);
  j["arg_n"] = rep.arg_n;
  return j;
}

}  // namespace

int hc_verify(const char* cert_json, int samples, long n_max,
              unsigned long long seed, double* min_ratio, char** out_json) {
  return guarded([&]() -> int {
    if (!cert_json || !min_ratio) throw usage_error("null argument to hc_verify");
    ordered_json doc;
    try {
      doc = ordered_json::parse(cert_json);
    } catch (const nlohmann::json::exception& e) {
      throw certificate_error(std::string("invalid JSON: ") + e.what());
    }
    std::string kind = doc.is_object() && doc.contains("kind")
                           ? doc.at("kind").get<std::string>()
                           : "";
    ordered_json report;
    if (kind == "cover-certificate") {
      VerifyReport rep =
          verify_cover_document(certificate_from_json(doc), samples, n_max, seed);
      *min_ratio = rep.min_ratio;
      report = verify_report_json(rep);
    } else if (kind == "hyperbolic-certificate") {
      HyperbolicCertificate cert = hyperbolic_from_json(doc);
      VerifyReport cu = verify_cover_document(cert.cu, samples, n_max, seed);
      VerifyReport cs = verify_cover_document(cert.cs, samples, n_max, seed);
      *min_ratio = std::min(cu.min_ratio, cs.min_ratio);
      report = ordered_json::object();
      report["kind"] = "verify-report";
      report["min_ratio"] = hex_double(*min_ratio);
      report["cu"] = verify_report_json(cu);
      report["cs"] = verify_report_json(cs);
    } else {
      throw certificate_error("document kind '" + kind + "' is not verifiable");
    }
    if (out_json) *out_json = heap_string(dump_canonical(report));
    return HC_OK;
  });
}

int hc_lyapunov_csv(const hc_system* sys, int orbits, long length,
                    unsigned long long seed, char** out_csv) {
  return guarded([&]() -> int {
    if (!sys || !out_csv) throw usage_error("null argument to hc_lyapunov_csv");
    if (orbits < 1 || length < 1)
      throw usage_error("orbits and length must be >= 1");
    const MapSystem& m = *sys->sys;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<double> avg_sum(static_cast<size_t>(length), 0.0);
    std::vector<double> exp_sum(static_cast<size_t>(length), 0.0);
    Observable lambda = Observable::lambda();
    for (int o = 0; o < orbits; ++o) {
      Point x;
      if (m.space() == Space::two_point)
        x = (o % 2 == 0) ? two_point_p() : two_point_q();
      else if (m.base_dim() == 1)
        x = Point::circle(unif(rng));
      else
        x = Point::torus(unif(rng), unif(rng));
      double theta = 2.0 * M_PI * unif(rng);
      Vec v{m.dim(), {std::cos(theta), m.dim() == 2 ? std::sin(theta) : 0.0}};
      if (m.dim() == 1) v.v[0] = 1.0;

      Point y = x;
      double phi_sum = 0.0, log_norm = 0.0;
      for (long n = 1; n <= length; ++n) {
        phi_sum += lambda(m, y);
        v = m.deriv(y).apply(v);
        double nv = v.norm();
        if (!(nv > 0.0)) throw singular_matrix_error("tangent vector collapsed");
        log_norm += std::log(nv);
        for (int i = 0; i < v.dim; ++i) v.v[i] /= nv;
        y = m.eval(y);
        avg_sum[static_cast<size_t>(n - 1)] += phi_sum / static_cast<double>(n);
        exp_sum[static_cast<size_t>(n - 1)] += log_norm / static_cast<double>(n);
      }
    }

    std::ostringstream out;
    out << "n,average,exponent\n";
    out.precision(17);
    for (long n = 1; n <= length; ++n) {
      out << n << ',' << avg_sum[static_cast<size_t>(n - 1)] / orbits << ','
          << exp_sum[static_cast<size_t>(n - 1)] / orbits << '\n';
    }
    *out_csv = heap_string(out.str());
    return HC_OK;
  });
}

}  // extern "C"
