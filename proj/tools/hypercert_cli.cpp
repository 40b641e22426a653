// Command-line front end over the C library interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypercert/hypercert.h"

namespace {

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { hc_string_free(s); }
};

struct SystemGuard {
  hc_system* sys = nullptr;
  ~SystemGuard() { hc_system_destroy(sys); }
};

int report_error(int code) {
  std::cerr << "error: " << hc_last_error() << "\n";
  // Usage-level exit for everything that is not a defined protocol code.
  return (code == HC_INCONCLUSIVE || code == HC_NOT_FOUND) ? code : 1;
}

int open_system(const std::string& id, const std::vector<std::string>& params,
                SystemGuard& guard) {
  std::vector<const char*> raw;
  raw.reserve(params.size());
  for (const std::string& p : params) raw.push_back(p.c_str());
  return hc_system_create(id.c_str(), raw.empty() ? nullptr : raw.data(),
                          static_cast<int>(raw.size()), &guard.sys);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certifies uniform expansion / hyperbolicity of gallery maps "
               "and hunts for invariant measures that refute it"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hc_version()));

  std::string system_id, observable = "lambda", out_path, cert_path, csv_path;
  std::vector<std::string> params;
  double rate = 0.0, r_cs = 0.0;
  int n_max = 32, depth = 20, period_max = 8, samples = 1000, orbits = 1;
  int splitting_iters = 0, threads = 0;
  long verify_n = 60, length = 1000;
  unsigned long long seed = 1;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_id, "gallery system id")->required();
    cmd->add_option("--param", params, "system parameter key=value");
  };

  CLI::App* certify = app.add_subcommand(
      "certify", "build a cover certificate for an orbit-average rate");
  add_system(certify);
  certify->add_option("--observable", observable,
                      "lambda, cu, cs or center (directional ones use the "
                      "invariant splitting)");
  certify->add_option("--rate", rate, "certified decay rate r > 0")->required();
  certify->add_option("--nmax", n_max, "largest return time tried per box");
  certify->add_option("--depth", depth, "bisection depth limit");
  certify->add_option("--splitting-iters", splitting_iters,
                      "force a power-iteration splitting with this many steps");
  certify->add_option("--threads", threads, "worker count (0 = HYPERCERT_THREADS)");
  certify->add_option("--out", out_path, "certificate / witness-report path");

  CLI::App* falsify = app.add_subcommand(
      "falsify", "search periodic orbits for a nonnegative-average witness");
  add_system(falsify);
  falsify->add_option("--period-max", period_max, "largest period searched");
  falsify->add_option("--out", out_path, "witness JSON path");

  CLI::App* verify = app.add_subcommand(
      "verify", "Monte Carlo check of a serialized certificate");
  verify->add_option("--cert", cert_path, "certificate document")->required();
  verify->add_option("--samples", samples, "random sample count");
  verify->add_option("--nmax", verify_n, "largest iterate checked");
  verify->add_option("--seed", seed, "RNG seed");

  CLI::App* lyapunov = app.add_subcommand(
      "lyapunov", "emit running averages and finite-time exponents as CSV");
  add_system(lyapunov);
  lyapunov->add_option("--orbits", orbits, "number of sampled orbits");
  lyapunov->add_option("--length", length, "orbit length (CSV row count)");
  lyapunov->add_option("--seed", seed, "RNG seed");
  lyapunov->add_option("--csv", csv_path, "output path (default stdout)");

  CLI::App* hyperbolic = app.add_subcommand(
      "hyperbolic", "certify expansion along E^cu and contraction along E^cs");
  add_system(hyperbolic);
  hyperbolic->add_option("--rate-cu", rate, "rate for the expanding side")
      ->required();
  hyperbolic->add_option("--rate-cs", r_cs,
                         "rate for the contracting side (default: rate-cu)");
  hyperbolic->add_option("--nmax", n_max, "largest return time tried per box");
  hyperbolic->add_option("--depth", depth, "bisection depth limit");
  hyperbolic->add_option("--splitting-iters", splitting_iters,
                         "force a power-iteration splitting");
  hyperbolic->add_option("--threads", threads,
                         "worker count (0 = HYPERCERT_THREADS)");
  hyperbolic->add_option("--out", out_path, "certificate path");

  CLI::App* gallery_cmd =
      app.add_subcommand("gallery", "list systems and parameter domains");
  (void)gallery_cmd;

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const char* text) -> int {
    if (!text) return 0;
    if (out_path.empty()) {
      std::cout << text;
      return 0;
    }
    if (!write_file(out_path, text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    return 0;
  };

  if (app.got_subcommand(certify)) {
    SystemGuard sys;
    int rc = open_system(system_id, params, sys);
    if (rc != HC_OK) return report_error(rc);
    StringGuard doc;
    rc = hc_certify(sys.sys, observable.c_str(), rate, n_max, depth, threads,
                    splitting_iters, &doc.s);
    if (rc != HC_OK && rc != HC_INCONCLUSIVE) return report_error(rc);
    if (int w = emit(doc.s)) return w;
    if (rc == HC_INCONCLUSIVE) {
      std::cerr << "inconclusive: " << hc_last_error() << "\n";
      return 2;
    }
    return 0;
  }

  if (app.got_subcommand(hyperbolic)) {
    SystemGuard sys;
    int rc = open_system(system_id, params, sys);
    if (rc != HC_OK) return report_error(rc);
    if (!(r_cs > 0.0)) r_cs = rate;
    StringGuard doc;
    rc = hc_certify_hyperbolic(sys.sys, rate, r_cs, n_max, depth, threads,
                               splitting_iters, &doc.s);
    if (rc != HC_OK && rc != HC_INCONCLUSIVE) return report_error(rc);
    if (int w = emit(doc.s)) return w;
    if (rc == HC_INCONCLUSIVE) {
      std::cerr << "inconclusive: " << hc_last_error() << "\n";
      return 2;
    }
    return 0;
  }

  if (app.got_subcommand(falsify)) {
    SystemGuard sys;
    int rc = open_system(system_id, params, sys);
    if (rc != HC_OK) return report_error(rc);
    StringGuard doc;
    rc = hc_falsify(sys.sys, period_max, &doc.s);
    if (rc == HC_NOT_FOUND) {
      std::cerr << "no witness: " << hc_last_error() << "\n";
      return 3;
    }
    if (rc != HC_OK) return report_error(rc);
    return emit(doc.s);
  }

  if (app.got_subcommand(verify)) {
    std::ifstream in(cert_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << cert_path << "\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    double min_ratio = 0.0;
    StringGuard report;
    int rc = hc_verify(buf.str().c_str(), samples, verify_n, seed, &min_ratio,
                       &report.s);
    if (rc != HC_OK) return report_error(rc);
    std::cout << report.s;
    return min_ratio >= 1.0 ? 0 : 1;
  }

  if (app.got_subcommand(lyapunov)) {
    SystemGuard sys;
    int rc = open_system(system_id, params, sys);
    if (rc != HC_OK) return report_error(rc);
    StringGuard csv;
    rc = hc_lyapunov_csv(sys.sys, orbits, length, seed, &csv.s);
    if (rc != HC_OK) return report_error(rc);
    if (csv_path.empty()) {
      std::cout << csv.s;
      return 0;
    }
    if (!write_file(csv_path, csv.s)) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return 1;
    }
    return 0;
  }

  // gallery
  StringGuard doc;
  int rc = hc_gallery_json(&doc.s);
  if (rc != HC_OK) return report_error(rc);
  std::cout << doc.s;
  return 0;
}
