#pragma once

// File formats of the command-line frontend.
//
// Everything is JSON. Complex numbers are [re, im] pairs and a matrix is a
// list of rows. Reports are written canonically: object keys sorted, two-space
// indentation, floating-point values with 17 significant digits, so that a
// report re-parsed and re-serialized is byte-identical.
//
// System spec:   {"dim": n, "drift": M, "controls": [M, ...], "labels": [...]}
//            or  {"model": "two-spin"}
// Schedule:      {"segments": [{"duration": t, "u": [u1, ...]}, ...]}

#include "liedec/dynamics.hpp"
#include "liedec/models.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace liedec::io {

using Json = nlohmann::json;

/// Malformed or inconsistent user input (exit code 2 in the CLI).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, const std::string& what);

/// Matrices are validated Hermitian to 1e-8 and then symmetrized.
ControlSystem parse_system_spec(const Json& j);
Json system_spec_to_json(const ControlSystem& system);

ControlSchedule parse_schedule(const Json& j, std::size_t num_controls);
Json schedule_to_json(const ControlSchedule& schedule);

Json structure_report(const ComponentDecomposition& decomp, const Tolerances& tol);
Json propagation_report(const ComponentDecomposition& decomp, const PropagationResult& result);

std::string canonical_dump(const Json& j);

Json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace liedec::io
