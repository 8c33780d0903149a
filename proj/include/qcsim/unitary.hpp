#pragma once

#include "qcsim/circuit.hpp"
#include "qcsim/matrix.hpp"

namespace qcsim {

inline constexpr int kDefaultUnitaryQubitCap = 10;

// Dense 2^n x 2^n unitary of a measurement-free circuit: each instruction
// is embedded as I_l ⊗ U' ⊗ I_r (controls expanded via projectors) and
// later instructions are multiplied on the left. Deliberately independent
// of the amplitude kernels; serves as the dense test oracle.
//
// Throws unsupported_operation if the circuit contains a measurement and
// resource_limit_error when nb_qubits exceeds maxQubits.
Matrix circuit_unitary(const Circuit& c, int maxQubits = kDefaultUnitaryQubitCap);

// I_l ⊗ U' ⊗ I_r for a gate on contiguous targets starting at
// `firstTarget`, then restricted to control-satisfying columns.
Matrix embedded_gate_unitary(const Gate& g, int nbQubits, int offset = 0);

} // namespace qcsim
