#include "hypercert/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace hypercert {

std::string hex_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double parse_hex_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw certificate_error("malformed hexadecimal float: " + s);
  return v;
}

namespace {

ordered_json interval_json(const Interval& iv) {
  return ordered_json::array({hex_double(iv.lo), hex_double(iv.hi)});
}

Interval interval_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw certificate_error("interval must be a [lo, hi] pair");
  Interval iv{parse_hex_double(j[0].get<std::string>()),
              parse_hex_double(j[1].get<std::string>())};
  if (!(iv.lo <= iv.hi)) throw certificate_error("interval endpoints out of order");
  return iv;
}

ordered_json box_json(const Box& b) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < b.dim; ++i) arr.push_back(interval_json(b.iv[i]));
  return arr;
}

Box box_from(const ordered_json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2)
    throw certificate_error("box must have one or two interval axes");
  Box b;
  b.dim = static_cast<int>(j.size());
  for (int i = 0; i < b.dim; ++i) b.iv[i] = interval_from(j[i]);
  return b;
}

ordered_json params_json(const std::map<std::string, double>& params) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : params) obj[key] = hex_double(value);
  return obj;
}

std::map<std::string, double> params_from(const ordered_json& j) {
  std::map<std::string, double> params;
  for (auto it = j.begin(); it != j.end(); ++it)
    params[it.key()] = parse_hex_double(it.value().get<std::string>());
  return params;
}

ordered_json constants_json(const ExpansionConstants& k) {
  ordered_json obj = ordered_json::object();
  obj["n_bar"] = k.n_bar;
  obj["c"] = hex_double(k.c);
  obj["alpha"] = hex_double(k.alpha);
  obj["alpha_plus"] = hex_double(k.alpha_plus);
  obj["c0"] = hex_double(k.c0);
  obj["k"] = hex_double(k.k);
  obj["rho"] = hex_double(k.rho);
  obj["sigma"] = hex_double(k.sigma);
  obj["big_c"] = hex_double(k.big_c);
  return obj;
}

ExpansionConstants constants_from(const ordered_json& j) {
  ExpansionConstants k;
  k.n_bar = j.at("n_bar").get<int>();
  k.c = parse_hex_double(j.at("c").get<std::string>());
  k.alpha = parse_hex_double(j.at("alpha").get<std::string>());
  k.alpha_plus = parse_hex_double(j.at("alpha_plus").get<std::string>());
  k.c0 = parse_hex_double(j.at("c0").get<std::string>());
  k.k = parse_hex_double(j.at("k").get<std::string>());
  k.rho = parse_hex_double(j.at("rho").get<std::string>());
  k.sigma = parse_hex_double(j.at("sigma").get<std::string>());
  k.big_c = parse_hex_double(j.at("big_c").get<std::string>());
  return k;
}

void require_schema(const ordered_json& j, const char* kind) {
  if (!j.is_object()) throw certificate_error("document is not a JSON object");
  int version = j.at("schema_version").get<int>();
  if (version != kSchemaVersion)
    throw certificate_error("unsupported schema version " + std::to_string(version));
  if (j.at("kind").get<std::string>() != kind)
    throw certificate_error(std::string("expected document kind ") + kind);
}

void validate_certificate(const CoverCertificate& cert) {
  if (cert.entries.empty()) throw certificate_error("certificate has no cover boxes");
  if (!(cert.rate > 0.0)) throw certificate_error("rate must be positive");
  if (!(cert.consts.c > 0.0)) throw certificate_error("constant c must be positive");
  if (cert.consts.c != 2.0 * cert.rate)
    throw certificate_error("constant c does not equal twice the rate");
  if (!(cert.consts.sigma > 1.0))
    throw certificate_error("sigma must exceed 1");
  int n_bar = 1;
  for (const CoverEntry& e : cert.entries) {
    if (e.n < 1) throw certificate_error("cover entry time must be >= 1");
    if (!(e.margin > 0.0)) throw certificate_error("cover entry margin must be positive");
    n_bar = std::max(n_bar, e.n);
  }
  if (n_bar != cert.consts.n_bar)
    throw certificate_error("n_bar does not match the largest entry time");
  if (!constants_identities_hold(cert.consts))
    throw certificate_error("constant identities fail to recompute");
}

}  // namespace

ordered_json certificate_to_json(const CoverCertificate& cert) {
  ordered_json j = ordered_json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "cover-certificate";
  j["system"] = {{"id", cert.system_id}, {"params", params_json(cert.params)}};
  j["observable"] = cert.observable;
  j["rate"] = hex_double(cert.rate);
  j["constants"] = constants_json(cert.consts);
  ordered_json entries = ordered_json::array();
  for (const CoverEntry& e : cert.entries) {
    ordered_json entry = ordered_json::object();
    entry["box"] = box_json(e.box);
    entry["n"] = e.n;
    entry["margin"] = hex_double(e.margin);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  ordered_json prov = ordered_json::object();
  prov["rounding"] = cert.provenance.rounding;
  prov["n_max"] = cert.provenance.n_max;
  prov["depth_max"] = cert.provenance.depth_max;
  prov["threads"] = cert.provenance.threads;
  prov["tool_version"] = cert.provenance.tool_version;
  j["provenance"] = std::move(prov);
  if (cert.splitting) {
    ordered_json sp = ordered_json::object();
    sp["source"] = cert.splitting->source;
    sp["iterations"] = cert.splitting->iterations;
    sp["residual"] = hex_double(cert.splitting->residual);
    sp["conditional"] = cert.splitting->source == "estimated";
    j["splitting"] = std::move(sp);
  }
  return j;
}

CoverCertificate certificate_from_json(const ordered_json& j) {
  require_schema(j, "cover-certificate");
  CoverCertificate cert;
  cert.system_id = j.at("system").at("id").get<std::string>();
  cert.params = params_from(j.at("system").at("params"));
  cert.observable = j.at("observable").get<std::string>();
  cert.rate = parse_hex_double(j.at("rate").get<std::string>());
  cert.consts = constants_from(j.at("constants"));
  for (const auto& entry : j.at("entries")) {
    CoverEntry e;
    e.box = box_from(entry.at("box"));
    e.n = entry.at("n").get<int>();
    e.margin = parse_hex_double(entry.at("margin").get<std::string>());
    cert.entries.push_back(e);
  }
  const auto& prov = j.at("provenance");
  cert.provenance.rounding = prov.at("rounding").get<std::string>();
  cert.provenance.n_max = prov.at("n_max").get<int>();
  cert.provenance.depth_max = prov.at("depth_max").get<int>();
  cert.provenance.threads = prov.at("threads").get<int>();
  cert.provenance.tool_version = prov.at("tool_version").get<std::string>();
  if (j.contains("splitting")) {
    SplittingInfo info;
    const auto& sp = j.at("splitting");
    info.source = sp.at("source").get<std::string>();
    info.iterations = sp.at("iterations").get<int>();
    info.residual = parse_hex_double(sp.at("residual").get<std::string>());
    cert.splitting = info;
  }
  validate_certificate(cert);
  return cert;
}

ordered_json inconclusive_to_json(const InconclusiveReport& rep) {
  ordered_json j = ordered_json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "inconclusive-report";
  j["system"] = {{"id", rep.system_id}, {"params", params_json(rep.params)}};
  j["observable"] = rep.observable;
  j["rate"] = hex_double(rep.rate);
  j["n_max"] = rep.n_max;
  j["depth_max"] = rep.depth_max;
  j["depth_reached"] = rep.depth_reached;
  ordered_json witnesses = ordered_json::array();
  for (const WitnessBox& w : rep.witnesses) {
    ordered_json wj = ordered_json::object();
    wj["box"] = box_json(w.box);
    wj["best_upper"] = hex_double(w.best_upper);
    wj["depth"] = w.depth;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

ordered_json witness_to_json(const MapSystem& sys, const PeriodicOrbitWitness& w) {
  ordered_json j = ordered_json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "periodic-orbit-witness";
  j["system"] = {{"id", sys.id()}, {"params", params_json(sys.params())}};
  j["period"] = w.period;
  ordered_json points = ordered_json::array();
  for (const Point& pt : w.points) {
    ordered_json coords = ordered_json::array();
    for (int i = 0; i < pt.dim; ++i) coords.push_back(hex_double(pt.c[i]));
    points.push_back(std::move(coords));
  }
  j["points"] = std::move(points);
  j["average"] = hex_double(w.average);
  j["residual"] = hex_double(w.residual);
  return j;
}

ordered_json hyperbolic_to_json(const HyperbolicCertificate& cert) {
  ordered_json j = ordered_json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "hyperbolic-certificate";
  j["cu"] = certificate_to_json(cert.cu);
  j["cs"] = certificate_to_json(cert.cs);
  j["combined"] = {{"big_c", hex_double(cert.combined_c)},
                   {"sigma", hex_double(cert.combined_sigma)}};
  return j;
}

HyperbolicCertificate hyperbolic_from_json(const ordered_json& j) {
  require_schema(j, "hyperbolic-certificate");
  HyperbolicCertificate cert;
  cert.cu = certificate_from_json(j.at("cu"));
  cert.cs = certificate_from_json(j.at("cs"));
  cert.combined_c = parse_hex_double(j.at("combined").at("big_c").get<std::string>());
  cert.combined_sigma = parse_hex_double(j.at("combined").at("sigma").get<std::string>());
  if (cert.combined_c != std::min(cert.cu.consts.big_c, cert.cs.consts.big_c) ||
      cert.combined_sigma != std::min(cert.cu.consts.sigma, cert.cs.consts.sigma))
    throw certificate_error("combined constants do not recompute");
  if (!(cert.combined_sigma > 1.0))
    throw certificate_error("combined sigma must exceed 1");
  return cert;
}

std::string dump_canonical(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_document(const std::string& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open for writing: " + path);
  out << dump_canonical(j);
  if (!out) throw usage_error("write failed: " + path);
}

ordered_json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open for reading: " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw certificate_error(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace hypercert
