#pragma once

#include <vector>

#include "qcsim/matrix.hpp"

namespace qcsim {

// Tolerance for accepting user-supplied matrices as unitary
// (max-abs of U†U − I).
inline constexpr double kUnitaryTolerance = 1e-10;

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, RX, RY, RZ, Custom };

// A control qubit together with the value (0 or 1) that activates the gate.
struct ControlSpec {
    int qubit = 0;
    int state = 1;

    friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

/// A unitary applied to one or more target qubits, optionally conditioned
/// on polarized controls. CNOT, CZ and MCX are stored as X/Z plus controls;
/// the base matrix never bakes controls in.
struct Gate {
    GateKind kind = GateKind::X;
    double theta = 0.0;              // RX/RY/RZ only, radians
    std::vector<int> targets;        // named kinds: one qubit; Custom: contiguous ascending
    std::vector<ControlSpec> controls;
    Matrix custom;                   // Custom only

    // The 2^k x 2^k unitary of the uncontrolled gate.
    Matrix base_matrix() const;

    friend bool operator==(const Gate&, const Gate&) = default;
};

// Standard unitary of a named gate kind; controls are never included.
// Custom kinds carry their matrix on the Gate and are rejected here.
Matrix gate_matrix(GateKind kind, double theta = 0.0);

const char* gate_name(GateKind kind);

namespace gates {

Gate hadamard(int target);
Gate pauli_x(int target);
Gate pauli_y(int target);
Gate pauli_z(int target);
Gate s(int target);
Gate sdg(int target);
Gate t(int target);
Gate tdg(int target);
Gate rx(double theta, int target);
Gate ry(double theta, int target);
Gate rz(double theta, int target);

Gate cnot(int control, int target);
Gate cz(int control, int target);

// Multi-controlled X. `states[i]` is the activation value of `controls[i]`.
Gate mcx(std::vector<int> controls, int target, std::vector<int> states);

// Arbitrary unitary on a contiguous ascending window of target qubits.
// The matrix dimension must be 2^targets.size() and unitary within
// kUnitaryTolerance.
Gate custom(Matrix u, std::vector<int> targets);

} // namespace gates

} // namespace qcsim
