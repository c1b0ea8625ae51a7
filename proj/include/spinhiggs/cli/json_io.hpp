#pragma once

// JSON encodings shared by the CLI outputs. Complex numbers are written as
// [re, im]; on input a bare number is also accepted.

#include <json.hpp>

#include "spinhiggs/flow/audit.hpp"
#include "spinhiggs/lie_dims.hpp"
#include "spinhiggs/models/calibration.hpp"
#include "spinhiggs/models/quantum_top.hpp"

namespace spinhiggs {

using Json = nlohmann::ordered_json;

#ifndef SPINHIGGS_VERSION
#define SPINHIGGS_VERSION "0.0.0"
#endif
inline constexpr const char* kVersion = SPINHIGGS_VERSION;

Json to_json(cplx z);
// Throws ValidationError naming `path` when j is neither a number nor [re, im].
cplx complex_from_json(const Json& j, const std::string& path);

Json to_json(const DimReport& r);
Json to_json(const CountReport& r);
Json to_json(const CenterReport& r);
Json to_json(const TopLaxCalibration& c);
Json to_json(const CmLaxCalibration& c);
Json to_json(const ConservationReport& r);
Json to_json(const IsospectralReport& r);
Json to_json(const QuantumSpectrum& s);
Json to_json(const PhasePoint& pt);

// Inverses of the report encodings; throw ValidationError on missing fields.
DimReport dim_report_from_json(const Json& j);
CountReport count_report_from_json(const Json& j);

// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace spinhiggs
