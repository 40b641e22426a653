#pragma once

#include <string>

#include "json.hpp"

#include "hypercert/cover.hpp"
#include "hypercert/falsifier.hpp"
#include "hypercert/hyperbolic.hpp"

namespace hypercert {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Shortest hexadecimal float text that parses back to the same bits.
std::string hex_double(double v);
double parse_hex_double(const std::string& s);

ordered_json certificate_to_json(const CoverCertificate& cert);
/// Revalidates on load: schema version, c > 0, c = 2 rate, positive
/// margins, n_bar = max entry time, and the constant identities to 1 ulp.
CoverCertificate certificate_from_json(const ordered_json& j);

ordered_json inconclusive_to_json(const InconclusiveReport& rep);
ordered_json witness_to_json(const MapSystem& sys, const PeriodicOrbitWitness& w);
ordered_json hyperbolic_to_json(const HyperbolicCertificate& cert);
HyperbolicCertificate hyperbolic_from_json(const ordered_json& j);

/// Canonical byte form: two-space indent, trailing newline.
std::string dump_canonical(const ordered_json& j);

void write_document(const std::string& path, const ordered_json& j);
ordered_json read_document(const std::string& path);

}  // namespace hypercert
