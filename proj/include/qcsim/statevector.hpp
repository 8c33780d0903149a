#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/matrix.hpp"

namespace qcsim {

// Measurement outcomes below this probability are dropped; mid-circuit
// branches are pruned at the same absolute threshold.
inline constexpr double kProbPrune = 1e-12;

// Largest register the engine will allocate (2^30 amplitudes ≈ 16 GiB).
inline constexpr int kMaxSimQubits = 30;

/// Full state vector over n qubits. Bitstring character j (left to right)
/// is qubit j; basis index i = Σ_q b_q · 2^(n−1−q), so qubit 0 is the most
/// significant bit.
struct StateVector {
    int n = 0;
    std::vector<cplx> amps;

    std::uint64_t dim() const { return amps.size(); }
    double norm() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;
};

// Basis state from a bitstring of '0'/'1'.
StateVector init_state(std::string_view bits);

// Verbatim copy of a caller-supplied amplitude vector; must have length
// 2^n and unit norm within 1e-8.
StateVector init_state(std::vector<cplx> amps, int n);

// In-place U|ψ⟩ with the gate's qubits shifted by `offset` (block nesting).
void apply_gate_inplace(StateVector& state, const Gate& g, int offset = 0);

StateVector apply_gate(StateVector state, const Gate& g);

struct MeasureOutcome {
    int bit = 0;
    double probability = 0.0;
    StateVector state;  // collapsed and renormalized, measured qubit kept
};

// Single-qubit measurement in the given basis: outcomes with probability
// above kProbPrune, each with its collapsed renormalized state. Non-Z
// bases apply B before the Z measurement and B† afterwards.
std::vector<MeasureOutcome> measure(const StateVector& state, int qubit,
                                    const Basis& basis = Basis::z());

// Normalized state of the complement qubits obtained by fixing
// `knownQubits` to `outcome`. Throws invalid_state_error when more than
// 1e-8 of the amplitude mass lies outside that slice.
StateVector reduced_statevector(const StateVector& state, std::span<const int> knownQubits,
                                std::string_view outcome);

} // namespace qcsim
