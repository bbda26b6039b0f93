#pragma once

// JSON formats shared by the library and the command-line tool.
//
//   {"kind": "ensemble"|"povm"|"operators", "dim": d,
//    "elements": [{"matrix": [[[re, im], ...], ...]}, ...]}
//   {"kind": "fiducial", "dim": d, "amplitudes": [[re, im], ...]}
//
// Matrices are row-major lists of rows; complex numbers are [re, im] pairs.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sicinfo/optimize.hpp"
#include "sicinfo/sic.hpp"
#include "sicinfo/states.hpp"

namespace sicinfo::io {

using Json = nlohmann::json;

Json to_json(const Operator& op);
Json to_json(const Ensemble& e);
Json to_json(const Povm& p);
Json to_json(const SicCertificate& c);
Json to_json(const OptimizationReport& r);
Json to_json(const BoundSet& b);
Json fiducial_to_json(const PureState& psi);
Json operators_to_json(const std::vector<Operator>& ops);

Operator operator_from_json(const Json& j);
Ensemble ensemble_from_json(const Json& j);
Povm povm_from_json(const Json& j);
PureState fiducial_from_json(const Json& j);
/// Accepts any of the "ensemble", "povm" and "operators" kinds without
/// checking ensemble or POVM invariants.
std::vector<Operator> operators_from_json(const Json& j);

/// Parses a file; failures raise ParseError with the path in the message.
Json load_json(const std::filesystem::path& path);

}  // namespace sicinfo::io
