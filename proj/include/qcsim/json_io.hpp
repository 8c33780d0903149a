#pragma once

#include <string_view>

#include <json.hpp>

#include "qcsim/circuit.hpp"
#include "qcsim/simulate.hpp"

namespace qcsim {

// Circuit document schema:
//   {"qubits": n,
//    "instructions": [
//      {"gate": "h"|"x"|"y"|"z"|"s"|"sdg"|"t"|"tdg"|"rx"|"ry"|"rz",
//       "targets": [q], "controls": [{"qubit": q, "state": 0|1}, ...],
//       "theta": radians},
//      {"measure": {"qubit": q, "basis": "z"|"x"|"y"}},
//      {"block": {"circuit": {...}, "offset": k, "label": "text"}}
//    ]}
// Schema violations raise parse_error; semantic validation reuses the
// circuit rules.
Circuit circuit_from_json(const nlohmann::json& doc);
Circuit circuit_from_json_text(std::string_view text);

nlohmann::json circuit_to_json(const Circuit& c);

// Branches with outcomes, probabilities, full states and (when available)
// reduced states; doubles serialize at round-trip precision.
nlohmann::json result_to_json(const SimulationResult& r);

} // namespace qcsim
