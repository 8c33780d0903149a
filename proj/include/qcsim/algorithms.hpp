#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "qcsim/circuit.hpp"
#include "qcsim/density.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {

// Teleports q0's state to q2 through a Bell pair on q1/q2:
// CNOT(0,1), H(0), M(0), M(1), CNOT(1,2), CZ(0,2).
Circuit build_teleportation();

// Two-qubit Grover search for |11>.
Circuit grover_oracle();
Circuit grover_diffuser();
Circuit build_grover2();

// Distance-3 repetition code on q0..q2 with ancillas q3/q4: encode,
// optional bit flip on `errorQubit`, syndrome extraction, ancilla
// measurement, and a coherent MCX correction per the syndrome table.
Circuit build_repetition_qec(std::optional<int> errorQubit);

// Physical qubit a 2-bit syndrome points at ('00' -> no correction).
std::optional<int> qec_correction_target(std::string_view syndrome);

struct TomographyCoefficients {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

// Single-qubit state tomography: measures `v` in the X, Y and Z bases
// (`shots` samples each, seeded seed+0/1/2) and reconstructs
// ½(S0·I + S1·X + S2·Y + S3·Z) from the outcome frequencies.
std::pair<TomographyCoefficients, DensityMatrix>
tomography_estimate(const StateVector& v, long long shots, std::uint64_t seed);

// Infinite-shot limit: exact branch probabilities instead of sampling.
std::pair<TomographyCoefficients, DensityMatrix> tomography_exact(const StateVector& v);

} // namespace qcsim
